"""Group the d=5 S-boxes by the generator (or basis gcd) of their linear components space.

For each class, print one representative pair with the ANF of both rules
and the reduced LCS basis, which makes the shared nonlinear terms visible.
"""

from collections import defaultdict

from ocasbox.boolfun import anf, from_rule_number
from ocasbox.search import generator_label, run_search


def main():
    report = run_search(5)
    classes = defaultdict(list)
    for r in report.records:
        classes[(r.bucket, r.lcs_dim, generator_label(r.classification))].append(r)
    for (bucket, dim, label), recs in sorted(classes.items()):
        rep = recs[0]
        f, g = from_rule_number(rep.rule_f, 5), from_rule_number(rep.rule_g, 5)
        print(f"nl={bucket} dim={dim} generator={label}: {len(recs)} S-boxes")
        print(f"  e.g. f = {anf(f)}")
        print(f"       g = {anf(g)}")
        for row in rep.to_dict()["lcs_basis"]:
            print(f"       {row}")


if __name__ == "__main__":
    main()
