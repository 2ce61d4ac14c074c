from typing import (
    Any,
    Dict,
    List,
    Optional,
    Sequence,
    Union,
)

import os
import json
import numpy as np
import pandas as pd
from pydantic import BaseModel

from dualgame.api.models.records import (
    SyncResult,
    TrajectoryColumn,
    TrajectoryRecord,
)
from dualgame.api.utils.datastructs import get_constants
from dualgame.api.utils.svg import SvgPlot
from dualgame.api.protocols.protocols import SupportsParams


# Output helper functions
class OutputsMixinHelper:
    # trajectory file name
    @staticmethod
    def get_trajectory_file_name(run: int) -> str:
        return f"trajectory_{run}.csv"

    # json conversion of numpy values
    @staticmethod
    def to_json_value(v: Any) -> Any:
        if isinstance(v, np.ndarray):
            return v.tolist()
        if isinstance(v, np.generic):
            return v.item()
        if isinstance(v, BaseModel):
            return v.model_dump(mode="json")
        raise TypeError(f"Object of type {type(v).__name__} is not JSON serializable")

    # make sure output directory exists
    @staticmethod
    def ensure_directory(output_dir: str) -> str:
        try:
            os.makedirs(output_dir, exist_ok=True)
        except OSError as err:
            raise OSError(
                f"DualGame::emit_outputs(): cannot create output directory '{output_dir}': {err}"
            ) from err
        return output_dir

    # write text file
    @staticmethod
    def write_text(path: str, text: str) -> str:
        try:
            with open(path, "w", encoding="utf-8", newline="\n") as f:
                f.write(text)
        except OSError as err:
            raise OSError(f"DualGame::write_text(): cannot write '{path}': {err}") from err
        return path


# CSV, SVG, JSON and Excel outputs of experiments
class OutputsMixin(SupportsParams):
    """
    CSV, SVG, JSON and Excel outputs of experiments
    """

    # write trajectory CSV
    def write_trajectory(self, record: Optional[TrajectoryRecord], path: str) -> str:
        """
        Write trajectory record as CSV. If record is None, only the header is written.

        Parameters
        ----------
        record : TrajectoryRecord | None
            Trajectory record
        path : str
            Output file path
        """
        if record is None:
            df = pd.DataFrame(columns=get_constants(TrajectoryColumn))
        else:
            df = record.to_dataframe()
        return OutputsMixinHelper.write_text(
            path, df.to_csv(index=False, lineterminator="\n")
        )

    # write JSON report
    def write_report(
        self,
        report: Optional[Union[BaseModel, Dict[str, Any]]],
        path: str,
        include_log: bool = True,
    ) -> str:
        """
        Write report as JSON document with field order as declared

        Parameters
        ----------
        report : BaseModel | dict | None
            Report
        path : str
            Output file path
        include_log : bool, default True
            Embed log entries under 'log'
        """
        if isinstance(report, BaseModel):
            report = report.model_dump(mode="json")
        document = {"report": report}
        if include_log:
            document["log"] = list(self.LogEntries)
        text = json.dumps(
            document,
            indent=2,
            ensure_ascii=False,
            default=OutputsMixinHelper.to_json_value,
        )
        return OutputsMixinHelper.write_text(path, text + "\n")

    # write SVG plot
    def write_plot(
        self,
        series: Dict[str, Sequence[float]],
        path: str,
        log_y: bool = True,
        title: Optional[str] = None,
    ) -> str:
        """
        Write series as SVG line chart

        Parameters
        ----------
        series : dict[str, list[float]]
            Named series
        path : str
            Output file path
        log_y : bool, default True
            Use logarithmic y axis
        title : str | None, default None
            Chart title
        """
        return OutputsMixinHelper.write_text(
            path, SvgPlot.render(series, log_y=log_y, title=title)
        )

    # write Excel workbook
    def write_excel(self, records: List[TrajectoryRecord], path: str) -> str:
        """
        Write trajectory records into one workbook, one sheet per run

        Parameters
        ----------
        records : list[TrajectoryRecord]
            Trajectory records
        path : str
            Output file path
        """
        try:
            with pd.ExcelWriter(path, engine="xlsxwriter") as writer:
                if not records:
                    pd.DataFrame(columns=get_constants(TrajectoryColumn)).to_excel(
                        writer, sheet_name="run_0", index=False
                    )
                for record in records:
                    record.to_dataframe().to_excel(
                        writer, sheet_name=f"run_{record.run}", index=False
                    )
        except OSError as err:
            raise OSError(f"DualGame::write_excel(): cannot write '{path}': {err}") from err
        return path

    # emit experiment outputs
    def emit_outputs(
        self,
        records: List[TrajectoryRecord],
        output_dir: str,
        report: Optional[Union[BaseModel, Dict[str, Any]]] = None,
        excel: bool = False,
        log_y: bool = True,
    ) -> List[str]:
        """
        Write one CSV per run, an SVG plot of state norms and estimate errors,
        a JSON report and optionally an Excel workbook.
        Returns the list of written files.

        Parameters
        ----------
        records : list[TrajectoryRecord]
            Trajectory records
        output_dir : str
            Output directory
        report : BaseModel | dict | None, default None
            Report written into 'report.json'
        excel : bool, default False
            Also write 'trajectories.xlsx'
        log_y : bool, default True
            Use logarithmic y axis in the plot
        """
        OutputsMixinHelper.ensure_directory(output_dir)
        files = []
        if not records:
            files.append(
                self.write_trajectory(
                    None,
                    os.path.join(
                        output_dir, OutputsMixinHelper.get_trajectory_file_name(0)
                    ),
                )
            )
        for record in records:
            files.append(
                self.write_trajectory(
                    record,
                    os.path.join(
                        output_dir, OutputsMixinHelper.get_trajectory_file_name(record.run)
                    ),
                )
            )

        series = {}
        for record in records:
            series[f"|x| run {record.run}"] = record.norms().tolist()
        for record in records:
            series[f"est_error run {record.run}"] = record.estimate_errors().tolist()
        files.append(
            self.write_plot(
                series,
                os.path.join(output_dir, "plot.svg"),
                log_y=log_y,
                title="State norm and estimate error",
            )
        )
        files.append(self.write_report(report, os.path.join(output_dir, "report.json")))
        if excel:
            files.append(
                self.write_excel(records, os.path.join(output_dir, "trajectories.xlsx"))
            )
        return files

    # emit synchronization outputs
    def emit_sync_outputs(self, result: SyncResult, output_dir: str) -> List[str]:
        """
        Write trajectory CSV, SVG plot of |x|, the first coordinates of both chains
        and the estimate error, and the JSON summary of a synchronization run

        Parameters
        ----------
        result : SyncResult
            Synchronization result
        output_dir : str
            Output directory
        """
        OutputsMixinHelper.ensure_directory(output_dir)
        record = result.record
        norms = record.norms().tolist()
        if record.final_state is not None:
            norms.append(float(np.linalg.norm(record.final_state.x)))
        files = [
            self.write_trajectory(
                record,
                os.path.join(
                    output_dir, OutputsMixinHelper.get_trajectory_file_name(record.run)
                ),
            ),
            self.write_plot(
                {
                    "|x|": norms,
                    "est_error": record.estimate_errors().tolist(),
                },
                os.path.join(output_dir, "plot.svg"),
                log_y=True,
                title=f"Synchronization, n = {record.scenario.n}",
            ),
            self.write_plot(
                {"y_1": result.y_first, "z_1": result.z_first},
                os.path.join(output_dir, "chains.svg"),
                log_y=False,
                title="First coordinates of both chains",
            ),
        ]
        summary = {
            "n": record.scenario.n,
            "steps": len(record),
            "noise_floor": result.noise_floor,
            "sync_step": result.sync_step,
            "synchronized": result.synchronized,
            "rate_before": result.rate_before,
            "rate_after": result.rate_after,
            "slowdown": result.slowdown,
        }
        files.append(self.write_report(summary, os.path.join(output_dir, "report.json")))
        return files
