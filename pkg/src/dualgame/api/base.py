from typing import (
    Any,
    Dict,
    List,
    Optional,
    Union,
)

import numpy as np

from dualgame.api.enums.policies import ExplorationConvention
from dualgame.api.models.params import ProblemParams
from dualgame.api.utils.helper import ApiHelper
from dualgame.api.utils.validators import Validator

from dualgame.api.protocols.protocols import SupportsParams


# Problem parameters, error policy and random streams
class ParamsMixin(SupportsParams):
    """
    Problem parameters, error policy and random streams
    """

    @property
    def Params(self) -> ProblemParams:
        """
        Problem parameters
        """
        return self.__params

    @property
    def Dimension(self) -> int:
        """
        State dimension
        """
        return self.__params.n

    @property
    def Alpha(self) -> float:
        """
        Scale of the unknown matrix
        """
        return self.__params.alpha

    @property
    def Gamma(self) -> float:
        """
        Attenuation level
        """
        return self.__params.gamma

    @property
    def GammaStar(self) -> float:
        """
        Critical attenuation level
        """
        return self.__params.gamma_star

    @property
    def Errors(self) -> str:
        """
        Error handling policy
        """
        return self.__errors

    @property
    def Seed(self) -> int:
        """
        Base seed of random streams
        """
        return self.__seed

    @property
    def Convention(self) -> ExplorationConvention:
        """
        Sign convention of the exploration mean
        """
        return self.__convention

    @property
    def LogEntries(self) -> List[Dict[str, Any]]:
        """
        Structured log entries
        """
        return self.__log_entries

    def __init__(
        self,
        n: int = 1,
        alpha: float = 1.0,
        gamma: Union[float, str] = "star",
        errors: Optional[str] = "coerce",
        seed: int = 0,
        exploration_convention: Union[str, ExplorationConvention] = "minus_ihat",
        **kwargs,
    ):
        """
        Parameters
        ----------
        n : int, default 1
            State dimension
        alpha : float, default 1.0
            Scale of the unknown matrix, A*A^T = alpha^2*I
        gamma : float | str, default 'star'
            Attenuation level. 'star' resolves to alpha + sqrt(1 + alpha^2).
        errors : str, default 'coerce'
            If 'raise', then recoverable failures raise an exception.
            If 'coerce', then recoverable failures issue a warning and return a flagged report.
            If 'ignore', then recoverable failures return a flagged report silently.
        seed : int, default 0
            Base seed of random streams
        exploration_convention : str | ExplorationConvention, default 'minus_ihat'
            Sign convention of the exploration mean
        """
        error_types = ApiHelper.get_error_handling_types()
        errors = errors or "coerce"
        if errors not in error_types:
            raise ValueError(
                f"DualGame::__init__(): unknown error policy '{errors}'! "
                f"Use one of: {error_types}"
            )
        self.__errors = errors
        self.__params = ProblemParams(n=n, alpha=alpha, gamma=gamma)
        self.__seed = int(seed)
        self.__convention = Validator.get_exploration_convention_enum(
            exploration_convention
        )
        self.__log_entries = []

    # problem parameters
    def get_params(self, params: Optional[ProblemParams] = None) -> ProblemParams:
        """
        Get problem parameters

        Parameters
        ----------
        params : ProblemParams | None, default None
            Problem parameters. If None, the parameters of the instance are used.
        """
        return params or self.__params

    # random stream
    def get_rng(
        self,
        seed: Union[int, np.random.Generator, None] = None,
        run: Optional[int] = None,
    ) -> np.random.Generator:
        """
        Get random stream derived from (seed, run)

        Parameters
        ----------
        seed : int | np.random.Generator | None, default None
            Seed or existing stream. If None, the seed of the instance is used.
        run : int | None, default None
            Run index
        """
        return ApiHelper.get_rng(self.__seed if seed is None else seed, run)

    # recoverable error
    def handle_error(self, message: str, errors: Optional[str] = None) -> None:
        """
        Handle recoverable error according to error policy

        Parameters
        ----------
        message : str
            Error message
        errors : str | None, default None
            Error policy. If None, the policy of the instance is used.
        """
        ApiHelper.handle_error(message, errors or self.__errors)

    # exploration sign convention
    def set_exploration_convention(
        self, convention: Union[str, ExplorationConvention]
    ) -> ExplorationConvention:
        """
        Set sign convention of the exploration mean

        Parameters
        ----------
        convention : str | ExplorationConvention
            Convention name or value
        """
        self.__convention = Validator.get_exploration_convention_enum(convention)
        return self.__convention
