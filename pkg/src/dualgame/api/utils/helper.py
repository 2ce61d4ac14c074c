from typing import (
    Any,
    Union,
    List,
    Dict,
    Optional,
)

import warnings
import numpy as np


# General helper utilities
class ApiHelper:
    """
    General helper utilities
    """

    # error handling types
    @staticmethod
    def get_error_handling_types() -> List[str]:
        """
        Get known error handling policies
        """
        return ["raise", "coerce", "ignore"]

    # handle recoverable error
    @staticmethod
    def handle_error(message: str, errors: str = "coerce", **kwargs) -> None:
        """
        Handle recoverable error according to error policy

        Parameters
        ----------
        message : str
            Error message
        errors : str, default 'coerce'
            If 'raise', then RuntimeError is raised.
            If 'coerce', then warning is issued.
            If 'ignore', then nothing happens.
        """
        error_type = errors.lower() if isinstance(errors, str) else "coerce"
        if error_type == "raise":
            raise RuntimeError(message)
        elif error_type == "coerce":
            warnings.warn(message, RuntimeWarning, stacklevel=2)

    # update dictionary
    @staticmethod
    def update_dict(d: Dict, ignore_case: bool = True, **kwargs) -> Dict:
        """
        Update dictionary fields with keyword argument values.
        Keys are matched with ApiHelper.get_comparison_string.

        Parameters
        ----------
        d : dict
            Dictionary
        ignore_case : bool, default True
            Whether to ignore case
        """
        if not kwargs:
            return d
        values = {
            ApiHelper.get_comparison_string(k, ignore_case=ignore_case): v
            for k, v in kwargs.items()
        }
        updated_dict = {}
        for k, v in d.items():
            val = values.get(ApiHelper.get_comparison_string(k, ignore_case=ignore_case))
            updated_dict[k] = val if (val is not None) else v
        return updated_dict

    # get non-empty fields
    @staticmethod
    def get_non_empty_fields(d: Dict) -> Dict:
        """
        Get dictionary without None values
        """
        return {k: v for k, v in d.items() if (v is not None)}

    # get default characters to ignore
    @staticmethod
    def get_default_ignore_characters() -> List[str]:
        """
        Get list of default characters to ignore when comparing string names
        """
        return [" ", "_", "-", ".", ","]

    # get comparison string
    @staticmethod
    def get_comparison_string(
        s: str,
        ignore_characters: Union[List[str], str, bool] = True,
        ignore_case: bool = True,
        strip: bool = True,
        **kwargs,
    ) -> str:
        """
        Get string preprocessed for comparison

        Parameters
        ----------
        s : str
            String
        ignore_characters : list | bool | str, default True
            Characters to ignore. If True get_default_ignore_characters() will be used
        ignore_case: bool, default True
            Ignore case
        strip : bool, default True
            Strip/Trim string
        """
        s = str(s)
        if ignore_characters:
            if isinstance(ignore_characters, bool):
                ignore_characters = ApiHelper.get_default_ignore_characters()
            elif isinstance(ignore_characters, str):
                ignore_characters = [ignore_characters]
            for c in ignore_characters:
                s = s.replace(c, "")
        if ignore_case:
            s = s.lower()
        return s.strip() if strip else s

    # random stream
    @staticmethod
    def get_rng(
        seed: Union[int, np.random.Generator, None] = None, run: Optional[int] = None
    ) -> np.random.Generator:
        """
        Get random stream. Streams of individual runs are derived from (seed, run).

        Parameters
        ----------
        seed : int | np.random.Generator | None, default None
            Seed or existing random stream
        run : int | None, default None
            Run index
        """
        if isinstance(seed, np.random.Generator):
            return seed
        seed = 0 if seed is None else int(seed)
        if run is None:
            return np.random.default_rng(np.random.SeedSequence(seed))
        return np.random.default_rng(np.random.SeedSequence([seed, int(run)]))

    # squared Euclidean norm
    @staticmethod
    def norm_sq(x: Any) -> float:
        """
        Squared Euclidean norm
        """
        x = np.asarray(x, dtype=float).ravel()
        return float(x.dot(x))
