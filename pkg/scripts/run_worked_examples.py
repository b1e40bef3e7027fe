"""Recompute the worked type-A examples and print them as text.

    python3 scripts/run_worked_examples.py
"""

from bsassign.assignmod import (
    assignment_basis,
    cohomology_basis,
    defect_report,
    delta_face,
    delta_vertex,
    express_in_cohomology,
    face_of,
    integrate,
    is_cohomological,
)
from bsassign.bsgraph import build_graph, export_dot
from bsassign.cli import matrix_text
from bsassign.morse import morse_generators, report_to_text
from bsassign.rootsys import RootSystem


def section(title):
    print(f"\n=== {title} ===")


def main():
    a2, a3 = RootSystem.parse("A2"), RootSystem.parse("A3")

    section("graph of [2,1], oriented by the positive chamber")
    print(export_dot(build_graph(a2, (2, 1)), (1, 1)), end="")

    section("cohomological basis H^[2,1]")
    print(matrix_text("H", cohomology_basis(a2, (2, 1))), end="")

    section("assignment basis A^[2,1,2]")
    A = assignment_basis(a2, (2, 1, 2))
    print(matrix_text("A", A), end="")
    step = A.steps[-1]
    print("pivots", step.rref.pivots, "free", step.rref.free)

    section("defects of [2,1,2]")
    for J, coeffs in defect_report(a2, (2, 1, 2)).defects:
        g = A.graph
        print(f"A_{g.name(J)}:", ", ".join(f"H_{g.name(K)}: {c}" for K, c in enumerate(coeffs) if c.num))

    section("localization of delta_000 on [2,1,2]")
    g = build_graph(a2, (2, 1, 2))
    print(integrate(delta_vertex(g, 0)))

    for word, names in [((1, 2, 3, 1), ("1001", "1031")), ((1, 2, 3, 1, 2), ("10010", "10012", "10312", "10310"))]:
        g = build_graph(a3, word)
        eta = delta_face(g, face_of(g, [g.parse(n) for n in names]))
        section(f"face delta on {list(word)} through {', '.join(names)}")
        for v, c in zip(g.vertices, express_in_cohomology(eta)):
            if c.num:
                print(f"  H_{g.name(v)}: {c}")
        print("cohomological:", is_cohomological(eta))

    section("Morse generators of [2,1,2]")
    print(report_to_text(morse_generators(a2, (2, 1, 2), (1, 1))), end="")


if __name__ == "__main__":
    main()
