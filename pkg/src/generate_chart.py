"""Generate the interactive HTML chart of dim H^1 over l."""

from pathlib import Path

import pandas as pd
import plotly.express as px

# Get the project root (one level up from src/)
PROJECT_ROOT = Path(__file__).parent.parent
DATA_DIR = PROJECT_ROOT / "_data"
OUTPUT_DIR = PROJECT_ROOT / "_output"


def generate_h1_scan_chart():
    """Scatter of dim H^1(h, Hom(m, h)) for s2 x R2 over the scanned values of l."""
    df = pd.read_parquet(DATA_DIR / "parageom_h1_scan.parquet")
    df = df.sort_values("l_float")
    df["kind"] = df["exceptional"].map({True: "exceptional", False: "generic"})

    fig = px.scatter(
        df,
        x="l_float",
        y="dim_h1",
        color="kind",
        hover_data=["l", "expected_dim"],
        title="dim H^1 of s2 x R2 over l",
        labels={
            "l_float": "l",
            "dim_h1": "dim H^1(h, Hom(m, h))",
            "kind": "Value of l",
        },
    )

    fig.update_layout(
        template="plotly_white",
        hovermode="closest",
    )
    fig.update_traces(marker={"size": 10})

    OUTPUT_DIR.mkdir(parents=True, exist_ok=True)

    output_path = OUTPUT_DIR / "h1_scan_over_l.html"
    fig.write_html(str(output_path))
    print(f"Chart saved to {output_path}")

    return fig


if __name__ == "__main__":
    generate_h1_scan_chart()
