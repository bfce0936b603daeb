"""Brute-force verification of the design theory at small sizes.

Every graph on up to 7 nodes (up to isomorphism) is solved exactly and the
best achievable value is compared with the closed-form prediction.  The
structural checks then inspect the argmax graphs themselves.

The run below also demonstrates the one honest caveat: at n = 4 the graph
made of two disjoint edges ties the optimal design exactly (both give
capture probability 1/2 and a surviving pair), so the small-component
exclusion fails at that boundary and the verifier says so.
"""

from fractions import Fraction

from hsnet import UtilitySpec, exhaustive_optimum, format_rational


def report(n, u, label):
    rep = exhaustive_optimum(n, u)
    print(f"n={n}, {label}: {rep.graph_count} graphs")
    print(f"  best value        : {format_rational(rep.best_value)}")
    print(f"  closed-form value : {format_rational(rep.closed_form_value)}")
    print(f"  values agree      : {rep.value_match}")
    for check in rep.structural_checks:
        mark = "ok " if check.passed else "FAIL"
        print(f"  [{mark}] {check.name}: {check.detail}")
    if not rep.all_passed():
        print("  argmax graphs:")
        for g in rep.argmax_graphs:
            print(f"    n={g.node_count}, edges={sorted(g.edges)}")
    print()


def main():
    report(5, UtilitySpec.linear(1, 2), "linear value, beta=2")
    report(6, UtilitySpec.linear(1, 5), "linear value, beta=5")
    report(6, UtilitySpec.power(2, 0), "quadratic value, beta=0")
    print("The known boundary at n=4 (disjoint edges tie the optimum):\n")
    report(4, UtilitySpec.linear(1, 0), "linear value, beta=0")


if __name__ == "__main__":
    main()
