"""Transcribed formulas, verbatim, including their visible defects.

Each display is the right-hand side exactly as printed; suspected typos are
left in place and reported by :mod:`supero.tables.validate`, never fixed here.
"""

from .core import Branch

GL31_PROJECTIVES = (
    # {a,b,c|c}
    Branch("a,b,c|c", "b>c+1",
           "M_{a,b,c|c} + M_{a,b,c+1|c+1}"),
    Branch("a,b,c|c", "b=c+1, a>c+2",
           "M_{a,c+1,c|c} + M_{a,c+1,c+1|c+1} + M_{a,c+2,c+1|c+2}"),
    Branch("a,b,c|c", "b=c+1, a=c+2",
           (
            "M_{c+2,c+1,c|c} + M_{c+2,c+2,c+1|c+2} + M_{c+2,c+1,c+1|c+1}"
            " + M_{c+3,c+2,c+1|c+3}"
           )),
    Branch("a,b,c|c", "b=c+1, a=c+1",
           (
            "M_{c+1,c+1,c|c} + M_{c+1,c+1,c+1|c+1} + M_{c+1,c+2,c+1|c+2}"
            " + M_{c+2,c+1,c+1|c+2}"
           )),
    Branch("a,b,c|c", "b=c, a>c+1",
           "M_{a,c,c|c} + M_{a,c,c+1|c+1} + M_{a,c+1,c|c+1}"),
    Branch("a,b,c|c", "b=c, a=c+1",
           (
            "M_{c+1,c,c|c} + M_{c+2,c+1,c|c+2} + M_{c+1,c,c+1|c+1}"
            " + M_{c+1,c+1,c|c+1} + M_{c+2,c,c+1|c+2}"
           )),
    Branch("a,b,c|c", "b=c, a=c",
           "M_{c,c,c|c} + M_{c,c,c+1|c+1} + M_{c+1,c,c|c+1} + M_{c+1,c,c|c+1}"),
    Branch("a,b,c|c", "b<c, a>c+1",
           "M_{a,b,c|c} + M_{a,b,c+1|c+1} + M_{a,c,b|c} + M_{a,c+1,b|c+1}"),
    Branch("a,b,c|c", "b<c, a=c+1",
           (
            "M_{c+1,b,c|c} + M_{c+1,b,c+1|c+1} + M_{c+2,b,c+1|c+2} + M_{c+1,c,b|c}"
            " + M_{c+1,c+1,b|c+1} + M_{c+2,c+1,b|c+2}"
           )),
    Branch("a,b,c|c", "b<c, a=c",
           (
            "M_{c,b,c|c} + M_{c,b,c+1|c+1} + M_{c+1,b,c|c+1} + M_{c,c,b|c}"
            " + M_{c,c+1,b|c+1} + M_{c+1,c,b|c+1}"
           )),
    Branch("a,b,c|c", "b<c, a<c, a>b",
           (
            "M_{a,b,c|c} + M_{a,b,c+1|c+1} + M_{a,c,b|c} + M_{c,a,b|c}"
            " + M_{a,c+1,b|c+1} + M_{c+1,a,b|c+1} + M_{c,b,a|c} + M_{c+1,b,a|c+1}"
           )),
    Branch("a,b,c|c", "b<c, a=b",
           (
            "M_{b,b,c|c} + M_{b,b,c+1|c+1} + M_{b,c,b|c} + M_{b,c+1,b|c+1}"
            " + M_{c,b,b|c} + M_{c+1,b,b|c+1}"
           )),
    # {b,a,c|c}
    Branch("b,a,c|c", "b>c+1, a>b",
           "M_{b,a,c|c} + M_{b,a,c+1|c+1} + M_{a,b,c|c} + M_{a,b,c+1|c+1}"),
    Branch("b,a,c|c", "b=c+1, a>c+2",
           (
            "M_{c+1,a,c|c} + M_{c+2,a,c+1|c+2} + M_{c+1,a,c+1|c+1} + M_{a,c+1,c|c}"
            " + M_{a,c+2,c+1|c+2}+ M_{a,c+1,c+1|c+1}"
           )),
    Branch("b,a,c|c", "b=c+1, a=c+2",
           (
            "M_{c+1,c+2,c|c} + M_{c+2,c+1,c|c} + M_{c+1,c+2,c+1|c+1}"
            " + M_{c+2,c+1,c+1|c+1} + M_{c+2,c+2,c+1|c+2}"
           )),
    Branch("b,a,c|c", "b=c, a>c+1",
           (
            "M_{c,a,c|c} + M_{c,a,c+1|c+1} + M_{c+1,a,c|c+1} + M_{a,c,c|c}"
            " + M_{a,c,c+1|c+1} + M_{a,c+1,c|c+1}"
           )),
    Branch("b,a,c|c", "b=c, a=c+1",
           (
            "M_{c,c+1,c|c} + M_{c,c+2,c+1|c+2} + M_{c+1,c+2,c|c+2}"
            " + M_{c,c+1,c+1|c+1} + 2M_{c+1,c+1,c|c+1} + M_{c+2,c,c+1|c+2}"
            " + M_{c+2,c+1,c|c+2} + M_{c+1,c,c+1|c+1} + M_{c+1,c,c|c}"
           )),
    Branch("b,a,c|c", "b<c, a>c+1",
           (
            "M_{b,a,c|c} + M_{a,b,c|c} + M_{a,c,b|c} + M_{c,a,b|c}"
            " + M_{b,a,c+1|c+1} + M_{a,b,c+1|c+1} + M_{a,c+1,b|c+1}"
            " + M_{c+1,a,b|c+1}"
           )),
    Branch("b,a,c|c", "b<c, a=c+1",
           (
            "M_{b,c+1,c|c} + M_{b,c+2,c+1|c+2} + M_{b,c+1,c+1|c+1} + M_{c+1,b,c|c}"
            " + M_{c+2,b,c+1|c+2} + M_{c+1,b,c+1|c+1} + M_{c,c+1,b|c}"
            " + M_{c+1,c+2,b|c+2} + M_{c+1,c+1,b|c+1} + M_{c+1,c,b|c}"
            " + M_{c+2,c+1,b|c+2} + M_{c+1,c+1,b|c+1}"
           )),
    Branch("b,a,c|c", "b<c, a=c",
           (
            "M_{b,c,c|c} + M_{b,c,c+1|c+1} + M_{b,c+1,c|c+1} + M_{c,b,c|c}"
            " + M_{c,b,c+1|c+1} + M_{c+1,b,c|c+1} + M_{c,c,b|c} + M_{c,c+1,b|c+1}"
            " + M_{c+1,c,b|c+1}"
           )),
    Branch("b,a,c|c", "b<c, a<c, a>b",
           (
            "M_{b,a,c|c} + M_{b,a,c+1|c+1} + M_{b,c,a|c} + M_{b,c+1,a|c+1}"
            " + M_{a,b,c|c} + M_{a,b,c+1|c+1} + M_{c,b,a|c} + M_{c+1,b,a|c+1}"
            " + M_{a,c,b|c} + M_{a,c+1,b|c+1} + M_{c,a,b|c} + M_{c+1,a,b|c+1}"
           )),
    # {a,c,b|c}
    Branch("a,c,b|c", "b>c+1",
           "M_{a,c,b|c} + M_{a,c+1,b|c+1} + M_{a,b,c|c} + M_{a,b,c+1|c+1}"),
    Branch("a,c,b|c", "b=c+1, a>c+1",
           "M_{a,c,c+1|c} + M_{a,c+1,c+1|c+1} + M_{a,c+1,c|c}"),
    Branch("a,c,b|c", "b=c+1, a=c+1",
           (
            "M_{c+1,c,c+1|c} + M_{c+1,c+1,c+1|c+1} + M_{c+2,c+1,c+1|c+2}"
            " + M_{c+1,c+1,c|c}"
           )),
    Branch("a,c,b|c", "b<c, a>c+1",
           "M_{a,c,b|c} + M_{a,c+1,b|c+1}"),
    Branch("a,c,b|c", "b<c, a=c+1",
           "M_{c+1,c,b|c} + M_{c+1,c+1,b|c+1} + M_{c+2,c+1,b|c+2}"),
    Branch("a,c,b|c", "b<c, a=c",
           "M_{c,c,b|c} + M_{c,c+1,b|c+1} + M_{c+1,c,b|c+1}"),
    Branch("a,c,b|c", "b<c, a<c",
           "M_{a,c,b|c} + M_{a,c+1,b|c+1} + M_{c,a,b|c} + M_{c+1,a,b|c+1}"),
    # {b,c,a|c}
    Branch("b,c,a|c", "b>c+1, a>b",
           (
            "M_{b,c,a|c} + M_{b,a,c|c} + M_{a,b,c|c} + M_{a,c,b|c}"
            " + M_{b,c+1,a|c+1} + M_{b,a,c+1|c+1} + M_{a,b,c+1|c+1}"
            " + M_{a,c+1,b|c+1}"
           )),
    Branch("b,c,a|c", "b=c+1, a>c+2",
           (
            "M_{c+1,c,a|c} + M_{c+2,c+1,a|c+2} + M_{c+1,c+1,a|c+1} + M_{a,c,c+1|c}"
            " + M_{a,c+1,c+2|c+2} + M_{a,c+1,c+1|c+1} + M_{c+1,a,c|c}"
            " + M_{c+1,a,c+2|c+2} + M_{c+1,a,c+1|c+1} + M_{a,c+1,c|c}"
            " + M_{a,c+2,c+1|c+2} + M_{a,c+1,c+1|c+1}"
           )),
    Branch("b,c,a|c", "b=c+1, a=c+2",
           (
            "M_{c+1,c,c+2|c} + M_{c+2,c,c+1|c} + M_{c+1,c+1,c+2|c+1}"
            " + M_{c+2,c+1,c+1|c+1} + M_{c+2,c+1,c+2|c+2} + M_{c+2,c+1,c|c}"
            " + M_{c+1,c+2,c|c} + M_{c+1,c+2,c+1|c+1} + M_{c+2,c+1,c+1|c+1}"
            " + M_{c+2,c+2,c+1|c+2}"
           )),
    Branch("b,c,a|c", "b=c, a>c+1",
           (
            "M_{c,c,a|c} + M_{c+1,c,a|c+1} + M_{c,c+1,a|c+1} + M_{c,a,c|c}"
            " + M_{c+1,a,c|c+1} + M_{c,a,c+1|c+1} + M_{a,c,c|c} + M_{a,c+1,c|c+1}"
            " + M_{a,c,c+1|c+1}"
           )),
    Branch("b,c,a|c", "b=c, a=c+1",
           (
            "M_{c,c,c+1|c} + M_{c+1,c,c|c} + M_{c,c+1,c|c} + M_{c,c+1,c+1|c+1}"
            " + M_{c+1,c,c+1|c+1} + M_{c+1,c+1,c|c+1}"
           )),
    Branch("b,c,a|c", "b<c, a>c+1",
           (
            "M_{b,c,a|c} + M_{b,c+1,a|c+1} + M_{c,b,a|c} + M_{c+1,b,a|c+1}"
            " + M_{a,b,c|c} + M_{a,b,c+1|c+1} + M_{a,c,b|c} + M_{a,c+1,b|c+1}"
            " + M_{b,a,c|c} + M_{b,a,c+1|c+1} + M_{c,a,b|c} + M_{c+1,a,b|c+1}"
           )),
    Branch("b,c,a|c", "b<c, a=c+1, b=c-1",
           (
            "M_{c-1,c,c+1|c} + M_{c-1,c+1,c|c} + M_{c-1,c+1,c+1|c+1}"
            " + M_{c,c-1,c+1|c} + M_{c+1,c-1,c|c} + M_{c+1,c-1,c+1|c+1}"
            " + M_{c,c+1,c-1|c} + M_{c+1,c,c-1|c} + M_{c+1,c+1,c-1|c+1}"
           )),
    Branch("b,c,a|c", "b<c, a=c+1, b<c-1",
           (
            "M_{b,c,c+1|c} + M_{b,c+1,c|c} + M_{c,b,c+1|c} + M_{c,c+1,b|c}"
            " + M_{c+1,b,c|c} + M_{c+1,b,c|c}"
           )),
    Branch("b,c,a|c", "b<c, a<c, a>b",
           (
            "M_{b,c,a|c} + M_{b,c+1,a|c+1} + M_{c,b,a|c} + M_{c+1,b,a|c+1}"
            " + M_{a,c,b|c} + M_{a,c+1,b|c+1} + M_{c,a,b|c} + M_{c+1,a,b|c+1}"
           )),
    # {c,a,b|c}
    Branch("c,a,b|c", "b>c+1, a>b",
           (
            "M_{c,a,b|c} + M_{c+1,a,b|c+1} + M_{a,c,b|c}"
            " + M_{a,c+1,b|c+1} M_{b,a,c|c} + M_{b,a,c+1|c+1} + M_{a,b,c|c}"
            " + M_{a,b,c+1|c+1}"
           )),
    Branch("c,a,b|c", "b>c+1, a=b",
           (
            "M_{c,b,b|c} + M_{c+1,b,b|c+1} + M_{b,c,b|c} + M_{b,c+1,b|c+1}"
            " + M_{b,b,c|c} + M_{b,b,c+1|c+1}"
           )),
    Branch("c,a,b|c", "b=c+1, a>c+1",
           (
            "M_{c,a,c+1|c} + M_{c+1,a,c|c} + M_{c+1,a,c+1|c+1} + M_{a,c,c+1|c}"
            " + M_{a,c+1,c|c} + M_{a,c+1,c+1|c+1}"
           )),
    Branch("c,a,b|c", "b=c+1, a=c+1",
           (
            "M_{c,c+1,c+1|c} + M_{c+1,c,c+1|c} + M_{c+1,c+1,c|c}"
            " + M_{c+1,c+1,c+1|c+1}"
           )),
    Branch("c,a,b|c", "b<c, a>c+1",
           "M_{c,a,b|c} + M_{c+1,a,b|c+1} + M_{a,c,b|c} + M_{a,c+1,b|c+1}"),
    Branch("c,a,b|c", "b<c, a=c+1",
           "M_{c,c+1,b|c} + M_{c+1,c+1,b|c+1}"),
    Branch("c,a,b|c", "b<c, a<c",
           "M_{c,a,b|c} + M_{c+1,a,b|c+1}"),
    # {c,b,a|c}
    Branch("c,b,a|c", "b>c+1, a>b",
           (
            "M_{c,b,a|c} + M_{c+1,b,a|c+1} + M_{b,c,a|c} M_{b,c+1,a|c+1}"
            " + M_{c,a,b|c} + M_{c+1,a,b|c+1} M_{b,a,c|c} + M_{b,a,c+1|c+1}"
            " + M_{a,c,b|c} M_{a,c+1,b|c+1} + M_{a,b,c|c} + M_{a,b,c+1|c+1}"
           )),
    Branch("c,b,a|c", "b=c+1, a>c+1",
           (
            "M_{c,c+1,a|c} + M_{c+1,c,a|c} + M_{c+1,c+1,a|c+1} M_{c,a,c+1|c}"
            " + M_{c+1,a,c|c} + M_{c+1,a,c+1|c+1} M_{a,c,c+1|c} + M_{a,c+1,c|c}"
            " + M_{a,c+1,c+1|c+1}"
           )),
    Branch("c,b,a|c", "b<c, a>c+1",
           (
            "M_{c,b,a|c} + M_{c+1,b,a|c+1} + M_{c,a,b|c}"
            " + M_{c+1,a,b|c+1} M_{a,b,c|c} + M_{a,b,c+1|c+1} + M_{a,c,b|c}"
            " + M_{a,c+1,b|c+1}"
           )),
    Branch("c,b,a|c", "b<c, a=c+1",
           (
            "M_{c,b,c+1|c} + M_{c,b,c|c} + M_{c+1,b,c+1|c+1} M_{c,c+1,b|c}"
            " + M_{c,b,c|c} + M_{c+1,c+1,b|c+1}"
           )),
    Branch("c,b,a|c", "b<c, a<c, a>b",
           "M_{c,b,a|c} + M_{c+1,b,a|c+1} + M_{c,a,b|c} + M_{c+1,a,b,c+1}"),
)

GL22_PROJECTIVES = (
    # {a,b|b,a}
    Branch("a,b|b,a", "b<a-1",
           "M_{a,b|b,a} + M_{a+1,b|b,a+1} + M_{a,b+1|b+1,a} + M_{a+1,b+1|b+1,a+1}"),
    Branch("a,b|b,a", "b=a-1",
           (
            "M_{a,a-1|a-1,a} + M_{a+1,a-1|a-1,a+1} + M_{a,a|a,a} + M_{a,a+1|a,a+1}"
            " + 2M_{a+1,a|a,a+1} + M_{a+1,a|a+1,a} + M_{a+1,a+1|a+1,a+1}"
            " + M_{a+2,a|a,a+2} + M_{a+2,a+1|a+1,a+2}"
           )),
    Branch("a,b|b,a", "b=a",
           (
            "M_{a,a|a,a} + M_{a+1,a|a,a+1} + M_{a,a+1|a+1,a} + M_{a+1,a+1|a+1,a+1}"
            " + M_{a+1,a|a+1,a} + M_{a,a+1|a,a+1}"
           )),
    # {a,b|a,b}
    Branch("a,b|a,b", "b<a-1",
           (
            "M_{a,b|a,b} + M_{a+1,b|a+1,b} + M_{a,b+1|a,b+1} + M_{a+1,b+1|a+1,b+1}"
            " + M_{a,b|b,a} + M_{a+1,b|b,a+1} + M_{a,b+1|b+1,a}"
            " + M_{a+1,b+1|b+1,a+1}"
           )),
    Branch("a,b|a,b", "b=a-1",
           (
            "M_{a,a-1|a,a-1} + M_{a+1,a|a,a+1} + M_{a+1,a|a+1,a}"
            " + M_{a+1,a-1|a-1,a+1} + M_{a+1,a-1|a+1,a-1} + M_{a,a|a,a}"
            " + M_{a,a-1|a-1,a}"
           )),
    # {b,a|b,a}
    Branch("b,a|b,a", "b<a-1",
           (
            "M_{b,a|b,a} + M_{b,a+1|b,a+1} + M_{b+1,a|b+1,a} + M_{b+1,a+1|b+1,a+1}"
            " + M_{a,b|b,a} + M_{a+1,b|b,a+1} + M_{a,b+1|b+1,a}"
            " + M_{a+1,b+1|b+1,a+1}"
           )),
    Branch("b,a|b,a", "b=a-1",
           (
            "M_{a-1,a|a-1,a} + M_{a,a-1|a-1,a} + M_{a,a|a,a} + M_{a-1,a+1|a-1,a+1}"
            " + M_{a,a+1|a,a+1} + M_{a+1,a-1|a-1,a+1} + M_{a+1,a|a,a+1}"
           )),
    # {b,a|a,b}
    Branch("b,a|a,b", "b<a-1",
           (
            "M_{b,a|a,b} + M_{b,a+1|a+1,b} + M_{b+1,a|a,b+1} + M_{b+1,a+1|a+1,b+1}"
            " + M_{b,a|b,a} + M_{b,a+1|b,a+1} + M_{b+1,a|b+1,a}"
            " + M_{b+1,a+1|b+1,a+1} + M_{a,b|a,b} + M_{a+1,b|a+1,b}"
            " + M_{a,b+1|a,b+1} + M_{a+1,b+1|a+1,b+1} + M_{a,b|b,a}"
            " + M_{a+1,b|b,a+1} + M_{a,b+1|b+1,a} + M_{a+1,b+1|b+1,a+1}"
           )),
    Branch("b,a|a,b", "b=a-1",
           (
            "M_{a-1,a|a,a-1} + M_{a,a+1|a,a+1} + M_{a,a+1|a+1,a}"
            " + M_{a-1,a+1|a+1,a-1} + M_{a-1,a+1|a-1,a+1} + M_{a-1,a|a-1,a}"
            " + M_{a,a-1|a,a-1} + M_{a+1,a|a,a+1} + M_{a+1,a|a+1,a}"
            " + M_{a+1,a-1|a-1,a+1} + M_{a+1,a-1|a+1,a-1} + 2M_{a,a|a,a}"
            " + M_{a,a-1|a-1,a}"
           )),
)

GL22_COMPOSITIONS = (
    # {a,b|b,a}
    Branch("a,b|b,a", "b<a-2",
           (
            "L_{a,b|b,a} + L_{a,b|a,b} + L_{b,a|b,a} + L_{b,a|a,b}"
            " + L_{a-1,b|b,a-1} + L_{a-1,b|a-1,b} + L_{b,a-1|b,a-1}"
            " + L_{b,a-1|a-1,b} + L_{a,b-1|b-1,a} + L_{a,b-1|a,b-1}"
            " + L_{b-1,a|b-1,a} + L_{b-1,a|a,b-1} + L_{a-1,b-1|b-1,a-1}"
            " + L_{a-1,b-1|a-1,b-1} + L_{b-1,a-1|b-1,a-1} + L_{b-1,a-1|a-1,b-1}"
           )),
    Branch("a,b|b,a", "b=a-2",
           (
            "L_{a,a-2|a-2,a} + L_{a,a-2|a,a-2} + L_{a-2,a|a-2,a} + L_{a-2,a|a,a-2}"
            " + L_{a,a-3|a-3,a} + L_{a,a-3|a,a-3} + L_{a-3,a|a-3,a}"
            " + L_{a-3,a|a,a-3} + L_{a-1,a-3|a-3,a-1} + L_{a-1,a-3|a-1,a-3}"
            " + L_{a-3,a-1|a-3,a-1} + L_{a-3,a-1|a-1,a-3} + L_{a-1,a-2|a-2,a-1}"
            " + L_{a-1,a-2|a-1,a-2} + L_{a-2,a-1|a-2,a-1} + L_{a-2,a-1|a-1,a-2}"
            " + L_{a-2,a-3|a-3,a-2}"
           )),
    Branch("a,b|b,a", "b=a-1",
           (
            "L_{a,a-1|a-1,a} + L_{a-1,a|a-1,a} + L_{a,a-1|a,a-1} + L_{a-1,a|a,a-1}"
            " + 2L_{a-1,a-2|a-2,a-1} + L_{a-2,a-1|a-2,a-1} + L_{a-1,a-2|a-1,a-2}"
            " + L_{a-2,a-1|a-1,a-2} + L_{a-1,a-1|a-1,a-1} + L_{a-2,a-3|a-3,a-2}"
           )),
    Branch("a,b|b,a", "b=a",
           (
            "L_{a,a-1|a-1,a} + L_{a,a|a,a} + L_{a,a-1|a,a-1} + L_{a-1,a|a-1,a}"
            " + 2L_{a-1,a|a,a-1} + L_{a-1,a-2|a-2,a-1} + L_{a-1,a-1|a-1,a-1}"
           )),
    # {a,b|a,b}
    Branch("a,b|a,b", "b<a-2",
           (
            "L_{a,b|a,b} + L_{b,a|a,b} + L_{a-1,b|a-1,b} + L_{b,a-1|a-1,b}"
            " + L_{a,b-1|a,b-1} + L_{b-1,a|a,b-1} + L_{a-1,b-1|a-1,b-1}"
            " + L_{b-1,a-1|a-1,b-1}"
           )),
    Branch("a,b|a,b", "b=a-2",
           (
            "L_{a,a-2|a,a-2} + L_{a-2,a|a,a-2} + L_{a-1,a-2|a-1,a-2}"
            " + L_{a-2,a-1|a-1,a-2} + L_{a,a-3|a,a-3} + L_{a-3,a|a,a-3}"
            " + L_{a-1,a-3|a-1,a-3} + L_{a-3,a-1|a-1,a-3}"
           )),
    Branch("a,b|a,b", "b=a-1",
           (
            "L_{a,a-1|a,a-1} + L_{a-1,a|a,a-1} + L_{a-1,a-2|a-2,a-1}"
            " + L_{a-1,a-1|a-1,a-1} + L_{a-1,a-2|a-1,a-2} + L_{a-2,a-1|a-1,a-2}"
           )),
    # {b,a|b,a}
    Branch("b,a|b,a", "b<a-2",
           (
            "L_{b,a|b,a} + L_{b,a|a,b} + L_{b,a-1|b,a-1} + L_{b,a-1|a-1,b}"
            " + L_{b-1,a|b-1,a} + L_{b-1,a|a,b-1} + L_{a-1,b-1|a-1,b-1}"
            " + L_{b-1,a-1|a-1,b-1}"
           )),
    Branch("b,a|b,a", "b=a-2",
           (
            "L_{a-2,a|a-2,a} + L_{a-2,a|a,a-2} + L_{a-2,a-1|a-2,a-1}"
            " + L_{a-2,a-1|a-1,a-2} + L_{a-3,a|a-3,a} + L_{a-3,a|a,a-3}"
            " + L_{a-3,a-1|a-3,a-1} + L_{a-3,a-1|a-1,a-3}"
           )),
    Branch("b,a|b,a", "b=a-1",
           (
            "L_{a-1,a|a-1,a} + L_{a-1,a|a,a-1} + L_{a-1,a-2|a-2,a-1}"
            " + L_{a-1,a-1|a-1,a-1} + L_{a-2,a-1|a-2,a-1} + L_{a-2,a-1|a-1,a-2}"
           )),
    # {b,a|a,b}
    Branch("b,a|a,b", "b<a-2",
           "L_{b,a|a,b} + L_{b,a-1|a-1,b} + L_{b-1,a|a,b-1} + L_{b-1,a-1|a-1,b-1}"),
    Branch("b,a|a,b", "b=a-2",
           (
            "L_{a-2,a|a,a-2} + L_{a-3,a|a,a-3} + L_{a-3,a-1|a-1,a-3}"
            " + L_{a-2,a-1|a-1,a-2}"
           )),
    Branch("b,a|a,b", "b=a-1",
           "L_{a-1,a|a,a-1} + L_{a-1,a-1|a-1,a-1} + L_{a-2,a-1|a-1,a-2}"),
)
