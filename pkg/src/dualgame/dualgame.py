from typing import (
    Optional,
    Union,
)

# import api methods
from dualgame.api.base import ParamsMixin
from dualgame.api.enums.policies import ExplorationConvention
from dualgame.api.methods.game_model import GameModelMixin
from dualgame.api.methods.controller import ControllerMixin
from dualgame.api.methods.adversary import AdversaryMixin
from dualgame.api.methods.verifier import VerifierMixin
from dualgame.api.methods.experiments import ExperimentMixin
from dualgame.api.methods.outputs import OutputsMixin
from dualgame.api.methods.logs import LogsMixin


# Minimax dual control game
class DualGame(
    ParamsMixin,
    GameModelMixin,
    ControllerMixin,
    AdversaryMixin,
    VerifierMixin,
    ExperimentMixin,
    OutputsMixin,
    LogsMixin,
):
    """
    Minimax dual control of x_next = A*x + i*u + w with unknown A*A^T = alpha^2*I
    and unknown sign i
    """

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
            Scale of the unknown matrix
        gamma : float | str, default 'star'
            Attenuation level. 'star' resolves to the critical level alpha + sqrt(1 + alpha^2).
        errors : str, default 'coerce'
            If 'raise', then recoverable failures raise an exception.
            If 'coerce', then recoverable failures issue a warning.
            If 'ignore', then recoverable failures are silently reported.
        seed : int, default 0
            Base seed of random streams
        exploration_convention : str | ExplorationConvention, default 'minus_ihat'
            Sign convention of the exploration mean
        """
        super().__init__(
            n=n,
            alpha=alpha,
            gamma=gamma,
            errors=errors,
            seed=seed,
            exploration_convention=exploration_convention,
            **kwargs,
        )

    def __repr__(self):
        return (
            f"DualGame(n={self.Dimension}, alpha={self.Alpha:g}, gamma={self.Gamma:g}, "
            f"gamma_star={self.GammaStar:g})"
        )
