"""Screening Delzant polygons: when does the construction apply?

The recurrence construction needs an exceptional edge (self-intersection
-1) that is strictly shorter than the polygon's inradius.  This screen
finds a witness edge or explains the failure: monotone polygons and a
short list of borderline families are excluded for structural reasons.
"""

from atfkit import catalog, catalog_names, check_applicable

print("catalog families:", ", ".join(catalog_names()))
print()

entries = [
    "CP2(3)",
    "S2xS2(2,2)",
    "S2xS2(4,2)",
    "HirzebruchF1(4,1)",
    "Bl1CP2",
    "Bl2CP2",
    "Bl3CP2",
    "Blowup_S2xS2(4,2,1/2)",
    "Blowup_S2xS2(4,2,1)",
    "Blowup2_S2xS2(4,2)",
]

width = max(len(name) for name in entries)
for name in entries:
    report = check_applicable(catalog(name))
    if report.applicable:
        detail = (
            f"witness edge {report.witness_edge}"
            f" of length {report.witness_length} < max F = {report.max_F}"
        )
        verdict = "applicable"
    else:
        detail = report.exception_tag
        verdict = "excluded  "
    print(f"  {name:<{width}}  {verdict}  {detail}")
