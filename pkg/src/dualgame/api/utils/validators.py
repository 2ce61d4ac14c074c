from typing import Union

from dualgame.api.utils.helper import ApiHelper
from dualgame.api.enums.modes import ControlMode
from dualgame.api.enums.adversaries import AdversaryType
from dualgame.api.enums.policies import (
    PolicyType,
    ExplorationConvention,
)
from dualgame.api.enums.suites import VerificationSuite


class Validator:
    # get adversary type
    @staticmethod
    def get_adversary_type_enum(
        adversary_type: Union[str, AdversaryType], **kwargs
    ) -> AdversaryType:
        """
        Get AdversaryType enum

        Parameters
        ----------
        adversary_type : str, AdversaryType
            Adversary type
        """
        if isinstance(adversary_type, AdversaryType):
            return adversary_type
        # prepare name for comparison
        name = ApiHelper.get_comparison_string(adversary_type, **kwargs)
        if name in ("worstcase", "worst", "adversarial"):
            return AdversaryType.WorstCase
        elif name in ("gaussian", "normal", "noise"):
            return AdversaryType.Gaussian
        elif name in ("zero", "none", "null"):
            return AdversaryType.Zero
        elif name in ("constant", "fixed"):
            return AdversaryType.Constant
        raise ValueError(
            f"DualGame::get_adversary_type_enum(): "
            f"unknown adversary type: '{adversary_type}'! "
            f"Should be one of: {[t.name for t in AdversaryType]}"
        )

    # get policy type
    @staticmethod
    def get_policy_type_enum(
        policy_type: Union[str, PolicyType], **kwargs
    ) -> PolicyType:
        """
        Get PolicyType enum

        Parameters
        ----------
        policy_type : str, PolicyType
            Policy type
        """
        if isinstance(policy_type, PolicyType):
            return policy_type
        name = ApiHelper.get_comparison_string(policy_type, **kwargs)
        if name in ("closedform", "explicit", "closed"):
            return PolicyType.ClosedForm
        elif name in ("numeric", "numerical", "reference"):
            return PolicyType.Numeric
        elif name in ("certaintyequivalence", "ce"):
            return PolicyType.CertaintyEquivalence
        raise ValueError(
            f"DualGame::get_policy_type_enum(): "
            f"unknown policy type: '{policy_type}'! "
            f"Should be one of: {[t.name for t in PolicyType]}"
        )

    # get control mode
    @staticmethod
    def get_control_mode_enum(
        mode: Union[str, ControlMode], **kwargs
    ) -> ControlMode:
        """
        Get ControlMode enum

        Parameters
        ----------
        mode : str, ControlMode
            Control mode
        """
        if isinstance(mode, ControlMode):
            return mode
        name = ApiHelper.get_comparison_string(mode, **kwargs)
        if name in ("certaintyequivalence", "ce", "exploitation"):
            return ControlMode.CertaintyEquivalence
        elif name in ("exploration", "explore"):
            return ControlMode.Exploration
        raise ValueError(
            f"DualGame::get_control_mode_enum(): "
            f"unknown control mode: '{mode}'! "
            f"Should be one of: {[t.name for t in ControlMode]}"
        )

    # get verification suite
    @staticmethod
    def get_verification_suite_enum(
        suite: Union[str, VerificationSuite], **kwargs
    ) -> VerificationSuite:
        """
        Get VerificationSuite enum

        Parameters
        ----------
        suite : str, VerificationSuite
            Suite name
        """
        if isinstance(suite, VerificationSuite):
            return suite
        name = ApiHelper.get_comparison_string(suite, **kwargs)
        if name == "all":
            return VerificationSuite.All
        elif name in ("thm3", "theorem3", "minmax"):
            return VerificationSuite.Theorem3
        elif name in ("bellman", "fixedpoint"):
            return VerificationSuite.Bellman
        elif name in ("vi", "valueiteration"):
            return VerificationSuite.ValueIteration
        elif name in ("gamma", "threshold"):
            return VerificationSuite.Gamma
        elif name in ("policy", "convention"):
            return VerificationSuite.Policy
        raise ValueError(
            f"DualGame::get_verification_suite_enum(): "
            f"unknown verification suite: '{suite}'! "
            f"Should be one of: {[t.name for t in VerificationSuite]}"
        )

    # get exploration convention
    @staticmethod
    def get_exploration_convention_enum(
        convention: Union[str, ExplorationConvention], **kwargs
    ) -> ExplorationConvention:
        """
        Get ExplorationConvention enum

        Parameters
        ----------
        convention : str, ExplorationConvention
            Sign convention of the exploration mean
        """
        if isinstance(convention, ExplorationConvention):
            return convention
        name = ApiHelper.get_comparison_string(convention, **kwargs)
        if name in ("minusihat", "negativeihat"):
            return ExplorationConvention.MinusIHat
        elif name in ("plusihat", "ihat"):
            return ExplorationConvention.PlusIHat
        elif name in ("minus", "negative"):
            return ExplorationConvention.Minus
        elif name in ("plus", "positive"):
            return ExplorationConvention.Plus
        raise ValueError(
            f"DualGame::get_exploration_convention_enum(): "
            f"unknown exploration convention: '{convention}'! "
            f"Should be one of: {[t.name for t in ExplorationConvention]}"
        )
