from typing import (
    Any,
    Dict,
)

from dualgame.api.utils.helper import ApiHelper
from dualgame.api.protocols.protocols import SupportsParams


# Structured experiment and verification log
class LogsMixin(SupportsParams):
    """
    Structured experiment and verification log
    """

    # add log entry
    def add_log_entry(self, message: str, **kwargs) -> Dict[str, Any]:
        """
        Add log entry message.
        Use keyword arguments to pass other information.
        Known fields are:
            'message',
            'category','severity',
            'timestamp',
            'run','step',
            'numberofitems','valuebefore','valueafter',
            'messagedetails'
        Parameters
        ----------
        message : str
            Log message
        """
        log_entry = {
            "Timestamp": None,
            "Message": message,
            "Category": "Experiment",
            "Severity": "Information",
            "Run": None,
            "Step": None,
            "ValueBefore": None,
            "ValueAfter": None,
            "NumberOfItems": None,
            "MessageDetails": None,
        }
        log_entry = ApiHelper.get_non_empty_fields(
            ApiHelper.update_dict(log_entry, **kwargs)
        )
        self.LogEntries.append(log_entry)
        return log_entry

    # add verification log entry
    def add_verification_log_entry(
        self, message: str, passed: bool, **kwargs
    ) -> Dict[str, Any]:
        """
        Add log entry of a verification check

        Parameters
        ----------
        message : str
            Log message
        passed : bool
            Whether the check passed
        """
        return self.add_log_entry(
            message,
            category="Verification",
            severity="Information" if passed else "Warning",
            **kwargs,
        )

    # clear log
    def clear_log_entries(self) -> None:
        """
        Remove all log entries
        """
        self.LogEntries.clear()
