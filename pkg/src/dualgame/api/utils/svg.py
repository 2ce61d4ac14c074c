from typing import (
    Dict,
    Optional,
    Sequence,
)

import io
import numpy as np
import matplotlib
from matplotlib.figure import Figure


# SVG line charts
class SvgPlot:
    """
    SVG line charts rendered with matplotlib
    """

    # rendering parameters
    @staticmethod
    def get_rc_params() -> Dict:
        """
        Get matplotlib parameters. Fixed hash salt and text elements keep files reproducible.
        """
        return {
            "svg.hashsalt": "dualgame",
            "svg.fonttype": "none",
        }

    # render chart
    @staticmethod
    def render(
        series: Dict[str, Sequence[float]],
        log_y: bool = False,
        title: Optional[str] = None,
        width: float = 6.4,
        height: float = 4.0,
    ) -> str:
        """
        Render series as lines sharing one x axis (sample index)

        Parameters
        ----------
        series : dict[str, list[float]]
            Named series
        log_y : bool, default False
            Use logarithmic y axis. Non-positive values are dropped.
        title : str | None, default None
            Chart title
        width : float, default 6.4
            Figure width in inches
        height : float, default 4.0
            Figure height in inches
        """
        with matplotlib.rc_context(SvgPlot.get_rc_params()):
            fig = Figure(figsize=(width, height))
            ax = fig.add_subplot(1, 1, 1)
            has_positive = False
            for name, values in series.items():
                y = np.asarray(list(values), dtype=float)
                y[~np.isfinite(y)] = np.nan
                if log_y:
                    y[~(y > 0)] = np.nan
                has_positive = has_positive or bool(np.any(y > 0))
                ax.plot(np.arange(y.size), y, linewidth=1.5, label=name)
            if log_y and has_positive:
                ax.set_yscale("log")
            ax.set_xlabel("t")
            if title:
                ax.set_title(title)
            if series:
                ax.legend(loc="best", fontsize="small")
            ax.grid(True, which="both", alpha=0.3)
            buffer = io.StringIO()
            fig.savefig(buffer, format="svg", metadata={"Date": None})
        return buffer.getvalue()
