"""Tour of the four parameters and their optimal codes.

Builds a few small graphs, computes gamma (domination number), beta
(metric dimension), eta (minimum dominating + locating set) and lambda
(minimum locating-dominating set) with certified optimal witnesses, and
shows why the two "dominate and locate" notions differ on the 6-path.
"""

from locdom import Graph, full_report, is_ld, is_mld, metric_vector
from locdom.families import cycle, path

p6 = path(6).graph
print("P6 =", p6)

report = full_report(p6)
print(
    f"gamma={report.gamma} {report.witness_gamma}   "
    f"beta={report.beta} {report.witness_beta}   "
    f"eta={report.eta} {report.witness_eta}   "
    f"lambda={report.lambda_} {report.witness_lambda}"
)

# {1, 4} dominates and locates P6 ...
code = (1, 4)
print(f"\nis_mld(P6, {code}) =", is_mld(p6, code))
for v in (3, 5):
    print(f"  metric vector of {v} w.r.t. {code}:", metric_vector(p6, code, v))

# ... but vertices 3 and 5 see the same neighbourhood trace {4}, so the
# set is not locating-dominating; lambda needs one more vertex.
print(f"is_ld(P6, {code}) =", is_ld(p6, code))
print("is_ld(P6, (1, 3, 5)) =", is_ld(p6, (1, 3, 5)))

print("\nOther graphs:")
petersen = Graph(
    10,
    [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
     (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
     (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
)
for name, g in [("C9", cycle(9).graph), ("Petersen", petersen)]:
    r = full_report(g)
    print(
        f"  {name:9s} n={r.n} D={r.diameter}  "
        f"gamma={r.gamma} beta={r.beta} eta={r.eta} lambda={r.lambda_}"
    )
