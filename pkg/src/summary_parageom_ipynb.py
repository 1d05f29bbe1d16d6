# %%
"""
# Para-complex Structures: Verification Summary

This notebook summarizes the verification report for invariant para-complex structures
on 6-dimensional homogeneous spaces: first cohomology of the isotropy algebras, spaces
of equivariant brackets, Jacobi ideals of the bracket families, identification of the
reconstructed algebras and the geometry of the resulting models.

Every value in the report is computed in exact rational arithmetic. A row matches when
the computed value equals the recorded expectation exactly.
"""

# %%
import sys

sys.path.insert(1, "./src/")

import matplotlib.pyplot as plt
import seaborn as sns
import chartbook

import load_reports

BASE_DIR = chartbook.env.get_project_root()
DATA_DIR = BASE_DIR / "_data"

# %%
"""
## Load Data
"""

# %%
df = load_reports.load_reports(data_dir=DATA_DIR)
scan = load_reports.load_h1_scan(data_dir=DATA_DIR)

print("=== Verification Report ===")
print(f"Rows: {len(df)}")
print(f"Cases: {df['case'].nunique()}")
print(f"Mismatches: {int((~df['match']).sum())}")

# %%
"""
## Rows per Case and Operation
"""

# %%
counts = df.pivot_table(index="case", columns="operation", values="match", aggfunc="count", fill_value=0)
print(counts)

# %%
fig, ax = plt.subplots(figsize=(10, 7))
sns.heatmap(counts, annot=True, fmt="d", cmap="Blues", cbar=False, ax=ax)
ax.set_title("Report Rows per Case and Operation")
plt.tight_layout()
plt.show()

# %%
"""
## Mismatches
"""

# %%
bad = load_reports.expand_json(load_reports.mismatches(df))
if bad.empty:
    print("Every row matches.")
else:
    print(bad[["case", "operation", "inputs", "outputs", "expected"]].to_string(index=False))

# %%
"""
## First Cohomology over l
"""

# %%
fig, ax = plt.subplots(figsize=(12, 5))
for exceptional, subset in scan.groupby("exceptional"):
    label = "exceptional" if exceptional else "generic"
    ax.scatter(subset["l_float"], subset["dim_h1"], label=label, s=40)
ax.set_xlabel("l")
ax.set_ylabel("dim H^1")
ax.set_title("dim H^1(h, Hom(m, h)) for s2 x R2")
ax.legend()
ax.grid(True, alpha=0.3)
plt.tight_layout()
plt.show()

# %%
print(scan[["l", "dim_h1", "expected_dim", "exceptional"]].to_string(index=False))

# %%
"""
## Geometry of the Models
"""

# %%
geometry_rows = load_reports.expand_json(df[df["operation"] == "geometry"])
for _, row in geometry_rows.iterrows():
    print(row["case"], row["inputs"], row["outputs"])
