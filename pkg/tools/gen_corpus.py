"""Regenerate the corpus .pd files deterministically.

Run from the repository root:  python tools/gen_corpus.py
"""

from pathlib import Path

from tanglecert.braids import braid_closure
from tanglecert.colorings import fox_solution_space
from tanglecert.diagram import parse_diagram, serialize
from tanglecert.moves import apply_r2_over
from tanglecert.persistence import cut_arc_once, cut_arc_twice
from tanglecert.tangle import (
    insert_into_host,
    mirror,
    numerator_closure,
    rational_tangle,
    tangle_add,
)

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"

TREFOIL = "X 1 4 2 5 ; X 3 6 4 1 ; X 5 2 6 3"


def write(name: str, comment: str, diagram) -> None:
    text = "".join(f"# {line}\n" for line in comment.splitlines())
    text += serialize(diagram)
    (CORPUS / name).write_text(text)
    print(f"wrote corpus/{name}")


def main() -> None:
    CORPUS.mkdir(exist_ok=True)
    trefoil = parse_diagram(TREFOIL)
    write("trefoil.pd", "Standard 3-crossing trefoil diagram; determinant 3.", trefoil)
    write(
        "unknot.pd",
        "Crossing-free unknot circle; determinant 1, only constant colorings.",
        parse_diagram("O 1"),
    )
    write(
        "hopf.pd",
        "Hopf link as the numerator closure of two east twists; link determinant 2.",
        numerator_closure(rational_tangle([2])),
    )
    write(
        "fig8-knot.pd",
        "Figure-8 knot: numerator closure of the 5/2 rational tangle; determinant 5.",
        numerator_closure(rational_tangle([2, 2])),
    )
    write(
        "6_2.pd",
        "Knot 6_2: numerator closure of the 11/4 rational tangle; determinant 11,\n"
        "nontrivially colorable mod 11.",
        numerator_closure(rational_tangle([3, 1, 2])),
    )
    write(
        "8_16.pd",
        "Knot 8_16 as a closed 3-braid (word 1 1 -2 1 1 -2 1 -2); determinant 35,\n"
        "nontrivially colorable mod 5.",
        braid_closure([1, 1, -2, 1, 1, -2, 1, -2], 3),
    )

    # 1-tangle and 2-tangle cut from the tricolored trefoil
    write(
        "fig3-1tangle.pd",
        "Persistent 1-tangle: the trefoil with one arc disconnected.",
        cut_arc_once(trefoil, 1),
    )
    coloring = fox_solution_space(trefoil, 3).first_nonconstant()
    fig4, _ = cut_arc_twice(trefoil, coloring, 1)
    write(
        "fig4-tangle.pd",
        "Persistent 2-tangle: the tricolored trefoil with one arc disconnected at\n"
        "two points; certificate modulus 3.",
        fig4,
    )

    # Krebes' tangle and the odd-prime family: a vertical twist column summed
    # with its mirror image
    def column_sum(p: int):
        v = rational_tangle([p, 0])
        return tangle_add(v, mirror(v))

    write(
        "fig1-krebes.pd",
        "Krebes' tangle: a column of 3 twists summed with its mirror image;\n"
        "boundary-monochromatic 3-coloring, closure determinants 0 and 9.",
        column_sum(3),
    )
    for p in (3, 5, 7):
        write(
            f"fig2-p{p}.pd",
            f"A column of {p} twists summed with its mirror image; persistent with\n"
            f"a boundary-monochromatic {p}-coloring.",
            column_sum(p),
        )

    # T + T* with denominator 7: certificate modulus 7
    t = rational_tangle([3, 2, 1])
    write(
        "fig5-t-plus-tstar.pd",
        "Sum of the 10/7 rational tangle with its mirror image; certificate\n"
        "modulus 7.",
        tangle_add(t, mirror(t)),
    )

    write(
        "fig8-tangle.pd",
        "A tangle whose numerator closure is the figure-8 knot (determinant 5)\n"
        "and whose denominator closure is the trefoil (determinant 3): both\n"
        "closures are nontrivial knots, yet the closure-determinant gcd is 1,\n"
        "so no coloring certificate exists.",
        rational_tangle([2, 1, 1]),
    )
    write(
        "fig9-tangle.pd",
        "A small tangle admitting no boundary-monochromatic nontrivial coloring:\n"
        "pinning the four endpoints to one color forces two internal arcs to\n"
        "agree, collapsing every coloring to a constant.",
        rational_tangle([2, 1]),
    )

    # Krebes' tangle inside a knot, then slid over other strands so the tangle
    # region overlaps the rest of the diagram; still 3-colorable
    kreb = column_sum(3)
    host = rational_tangle([2, 1])
    overlaid = insert_into_host(kreb, host, "N")
    tangle_arcs = sorted(kreb.arcs() - set(kreb.boundary))
    host_arc = max(overlaid.arcs())
    d = overlaid
    moved = 0
    for arc in tangle_arcs:
        from tanglecert.diagram import co_facial

        if arc in d.arcs() and host_arc in d.arcs() and arc != host_arc and co_facial(d, arc, host_arc):
            d, rec = apply_r2_over(d, arc, host_arc)
            host_arc = rec.fresh[2]
            moved += 1
            if moved == 2:
                break
    assert moved == 2
    write(
        "fig10-overlaid.pd",
        "Krebes' tangle inside a larger knot diagram, with tangle strands pushed\n"
        "over other portions of the diagram; the mod-3 coloring survives, so the\n"
        "knot is nontrivial.",
        d,
    )


if __name__ == "__main__":
    main()
