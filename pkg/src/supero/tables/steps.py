"""Individual translation steps printed in the proofs of the tables.

Each entry names the family and branch it belongs to, the weight being
deduced (usually the family representative, sometimes an intermediate),
the weight ``mu`` whose projective is translated, the representation, and
the printed flag of ``P_mu`` and the projection as printed.  Printed projections are kept verbatim apart from
whitespace; the one display whose layout interleaves another formula is
split, and the split is recorded in ``note``.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ProofStep:
    shape: str  # "3x1" or "2x2"
    family: str
    guard: str
    target: str
    mu: str
    rep: str
    printed_pmu: str  # the proof's own flag for P_mu, as printed
    display: str
    note: str = ""

    @property
    def case_id(self) -> str:
        return f"{{{self.family}}} [{self.guard}] Pr_{{{self.target}}}(P_{{{self.mu}}} x {self.rep})"


STEPS = (
    ProofStep("3x1", "a,b,c|c", "b>c+1", "a,b,c|c", "a,b,c|c+1", "V",
              "M_{a,b,c|c+1}",
              "M_{a,b,c|c} + M_{a,b,c+1|c+1}"),
    ProofStep("3x1", "a,b,c|c", "b=c+1, a>c+2", "a,c+1,c|c", "a,c+1,c|c+2", "L2V",
              "M_{a,c+1,c|c+2}",
              "M_{a,c+1,c|c} + M_{a,c+1,c+1|c+1} + M_{a,c+2,c+1|c+2}"),
    ProofStep("3x1", "a,b,c|c", "b=c+1, a=c+2", "c+2,c+1,c|c", "c+2,c+1,c|c+3", "L3V",
              "M_{c+2,c+1,c|c+3}",
              (
                  "M_{c+2,c+1,c|c} + M_{c+2,c+2,c+1|c+2} + M_{c+2,c+1,c+1|c+1}"
                  " + M_{c+3,c+2,c+1|c+3}"
              )),
    ProofStep("3x1", "a,b,c|c", "b=c+1, a=c+1", "c+1,c+1,c|c", "c+1,c+1,c|c+2", "L2V",
              "M_{c+1,c+1,c|c+2}",
              (
                  "M_{c+1,c+1,c|c} + M_{c+1,c+1,c+1|c+1} + M_{c+1,c+2,c+1|c+2}"
                  " + M_{c+2,c+1,c+1|c+2}"
              )),
    ProofStep("3x1", "a,b,c|c", "b=c, a>c+1", "a,c,c|c", "a,c,c|c+1", "V",
              "M_{a,c,c|c+1}",
              "M_{a,c,c|c} + M_{a,c,c+1|c+1} + M_{a,c+1,c|c+1}"),
    ProofStep("3x1", "a,b,c|c", "b=c, a=c+1", "c+1,c,c|c", "c+1,c,c|c+2", "L2V",
              "M_{c+1,c,c|c+2}",
              (
                  "M_{c+1,c,c|c} + M_{c+2,c+1,c|c+2} + M_{c+1,c,c+1|c+1}"
                  " + M_{c+1,c+1,c|c+1} + M_{c+2,c,c+1|c+2}"
              )),
    ProofStep("3x1", "a,b,c|c", "b=c, a=c", "c,c,c|c", "c,c,c|c+1", "V",
              "M_{c,c,c|c+1}",
              "M_{c,c,c|c} + M_{c,c,c+1|c+1} + M_{c,c+1,c|c+1} + M_{c+1,c,c|c+1}"),
    ProofStep("3x1", "a,b,c|c", "b<c, a>c+1", "a,b,c|c", "a,b,c|c+1", "V",
              "M_{a,b,c|c+1} + M_{a,c,b|c+1}",
              "M_{a,b,c|c} + M_{a,b,c+1|c+1} + M_{a,c,b|c} + M_{a,c+1,b|c+1}"),
    ProofStep("3x1", "a,b,c|c", "b<c, a=c+1", "c+1,b,c|c", "c+1,b,c|c+2", "L2V",
              "M_{c+1,b,c|c+2} + M_{c+1,c,b|c+2}",
              (
                  "M_{c+1,b,c|c} + M_{c+1,b,c+1|c+1} + M_{c+2,b,c+1|c+2}"
                  " + M_{c+1,c,b|c} + M_{c+1,c+1,b|c+1} + M_{c+2,c+1,b|c+2}"
              )),
    ProofStep("3x1", "a,b,c|c", "b<c, a=c", "c,b,c|c", "c,b,c|c+1", "V",
              "M_{c,b,c|c+1} + M_{c,c,b|c+1}",
              (
                  "M_{c,b,c|c} + M_{c,b,c+1|c+1} + M_{c+1,b,c|c+1} + M_{c,c,b|c}"
                  " + M_{c,c+1,b|c+1} + M_{c+1,c,b|c+1}"
              )),
    ProofStep("3x1", "a,b,c|c", "b<c, a<c, a>b", "a,b,c|c", "a,b,c|c+1", "V",
              "M_{a,b,c|c+1} + M_{a,c,b|c+1} + M_{c,a,b|c+1} + M_{c,b,a|c+1}",
              (
                  "M_{a,b,c|c} + M_{a,b,c+1|c+1} + M_{a,c,b|c} + M_{c,a,b|c}"
                  " + M_{a,c+1,b|c+1} + M_{c+1,a,b|c+1} + M_{c,b,a|c}"
                  " + M_{c+1,b,a|c+1}"
              )),
    ProofStep("3x1", "a,b,c|c", "b<c, a=b", "b,b,c|c", "b,b,c|c+1", "V",
              "M_{b,b,c|c+1} + M_{b,c,b|c+1} + M_{c,b,b|c+1}",
              (
                  "M_{b,b,c|c} + M_{b,b,c+1|c+1} + M_{b,c,b|c} + M_{b,c+1,b|c+1}"
                  " + M_{c,b,b|c} + M_{c+1,b,b|c+1}"
              )),
    ProofStep("3x1", "b,a,c|c", "b>c+1, a>b", "b,a,c|c", "b,a,c|c+1", "V",
              "M_{b,a,c|c+1} + M_{a,b,c|c+1}",
              "M_{b,a,c|c} + M_{b,a,c+1|c+1} + M_{a,b,c|c} + M_{a,b,c+1|c+1}"),
    ProofStep("3x1", "b,a,c|c", "b=c+1, a>c+2", "c+1,a,c|c", "c+1,a,c|c+2", "L2V",
              "M_{c+1,a,c|c+2} + M_{c+1,a,c|c+2}",
              (
                  "M_{c+1,a,c|c} + M_{c+2,a,c+1|c+2} + M_{c+1,a,c+1|c+1}"
                  " + M_{a,c+1,c|c} + M_{a,c+2,c+1|c+2}+ M_{a,c+1,c+1|c+1}"
              )),
    ProofStep("3x1", "b,a,c|c", "b=c+1, a=c+2", "c+1,c+2,c|c", "c+1,c+2,c|c+3", "L3V",
              "M_{c+1,c+2,c|c+3} + M_{c+2,c+1,c|c+3}",
              (
                  "M_{c+1,c+2,c|c} + 2M_{c+2,c+2,c+1|c+2} + M_{c+1,c+2,c+1|c+1}"
                  " + M_{c+2,c+3,c+1|c+3} + M_{c+2,c+1,c|c} + M_{c+2,c+1,c+1|c+1}"
                  " + M_{c+3,c+2,c+1|c+3}"
              )),
    ProofStep("3x1", "b,a,c|c", "b=c+1, a=c+2", "c+1,c+2,c|c", "c+1,c+1,c|c+1", "L2V",
              "M_{c+1,c+1,c|c+1} + M_{c+1,c+2,c|c+2} + M_{c+2,c+1,c|c+2}",
              (
                  "2M_{c+1,c+2,c|c} + 2M_{c+2,c+1,c|c} + 2M_{c+1,c+2,c+1|c+1}"
                  " + 2M_{c+2,c+1,c+1|c+1} + 2M_{c+2,c+2,c+1|c+2}"
              )),
    ProofStep("3x1", "b,a,c|c", "b=c, a>c+1", "c,a,c|c", "c,a,c|c+1", "V",
              "M_{c,a,c|c+1} + M_{a,c,c|c+1}",
              (
                  "M_{c,a,c|c} + M_{c,a,c+1|c+1} + M_{c+1,a,c|c+1} + M_{a,c,c|c}"
                  " + M_{a,c,c+1|c+1} + M_{a,c+1,c|c+1}"
              )),
    ProofStep("3x1", "b,a,c|c", "b=c, a=c+1", "c,c+1,c|c", "c,c+1,c|c+2", "L3V*",
              "M_{c,c+1,c|c+2} + M_{c+1,c,c|c+2}",
              (
                  "M_{c,c+1,c|c} + M_{c,c+2,c+1|c+2} + M_{c+1,c+2,c|c+2}"
                  " + M_{c,c+1,c+1|c+1} + 2M_{c+1,c+1,c|c+1} + M_{c+2,c,c+1|c+2}"
                  " + M_{c+2,c+1,c|c+2} + M_{c+1,c,c+1|c+1} + M_{c+1,c,c|c}"
              )),
    ProofStep("3x1", "b,a,c|c", "b<c, a>c+1", "b,a,c|c", "b,a,c|c+1", "V",
              "M_{b,a,c|c+1} + M_{a,b,c|c+1} + M_{a,c,b|c+1} + M_{c,a,b|c+1}",
              (
                  "M_{b,a,c|c} + M_{a,b,c|c} + M_{a,c,b|c} + M_{c,a,b|c}"
                  " + M_{b,a,c+1|c+1} + M_{a,b,c+1|c+1} + M_{a,c+1,b|c+1}"
                  " + M_{c+1,a,b|c+1}"
              )),
    ProofStep("3x1", "b,a,c|c", "b<c, a=c+1", "b,c+1,c|c", "b,c+1,c|c+2", "L2V",
              (
                  "M_{b,c+1,c|c+2} + M_{c+1,b,c|c+2} + M_{c+1,c,b|c+2}"
                  " + M_{c+1,a,b|c+2}"
              ),
              (
                  "M_{b,c+1,c|c} + M_{b,c+2,c+1|c+2} + M_{b,c+1,c+1|c+1}"
                  " + M_{c+1,b,c|c} + M_{c+2,b,c+1|c+2} + M_{c+1,b,c+1|c+1}"
                  " + M_{c,c+1,b|c} + M_{c+1,c+2,b|c+2} + M_{c+1,c+1,b|c+1}"
                  " + M_{c+1,c,b|c} + M_{c+2,c+1,b|c+2} + M_{c+1,c+1,b|c+1}"
              )),
    ProofStep("3x1", "b,a,c|c", "b<c, a=c", "b,c,c|c", "b,c,c|c+1", "V",
              "M_{b,c,c|c+1} + M{c,b,c|c+1} + M_{c,c,b|c+1}",
              (
                  "M_{b,c,c|c} + M_{b,c,c+1|c+1} + M_{b,c+1,c|c+1} + M_{c,b,c|c}"
                  " + M_{c,b,c+1|c+1} + M_{c+1,b,c|c+1} + M_{c,c,b|c}"
                  " + M_{c,c+1,b|c+1} + M_{c+1,c,b|c+1}"
              )),
    ProofStep("3x1", "b,a,c|c", "b<c, a<c, a>b", "b,a,c|c", "b,a,c|c+1", "V",
              (
                  "M_{b,a,c|c+1} + M_{b,c,a|c+1} + M_{a,b,c|c+1} + M_{c,b,a|c+1}"
                  " + M_{a,c,b|c+1} + M_{c,a,b|c+1}"
              ),
              (
                  "M_{b,a,c|c} + M_{b,a,c+1|c+1} + M_{b,c,a|c} + M_{b,c+1,a|c+1}"
                  " + M_{a,b,c|c} + M_{a,b,c+1|c+1} + M_{c,b,a|c} + M_{c+1,b,a|c+1}"
                  " + M_{a,c,b|c} + M_{a,c+1,b|c+1} + M_{c,a,b|c} + M_{c+1,a,b|c+1}"
              )),
    ProofStep("3x1", "a,c,b|c", "b>c+1", "a,c,b|c", "a,c,b|c+1", "V",
              "M_{a,c,b|c+1} + M_{a,b,c|c+1}",
              "M_{a,c,b|c} + M_{a,c+1,b|c+1} + M_{a,b,c|c} + M_{a,b,c+1|c+1}"),
    ProofStep("3x1", "a,c,b|c", "b=c+1, a>c+1", "a,c,c+1|c", "a+1,c+1,c+1|c", "L2V*",
              "M_{a+1,c+1,c+1|c}",
              "M_{a,c,c+1|c} + M_{a,c+1,c+1|c+1} + M_{a,c+1,c|c}"),
    ProofStep("3x1", "a,c,b|c", "b=c+1, a=c+1", "c+1,c,c+1|c", "c+2,c+1,c+1|c", "L2V*",
              "M_{c+2,c+1,c+1|c}",
              (
                  "M_{c+1,c,c+1|c} + M_{c+1,c+1,c+1|c+1} + M_{c+2,c+1,c+1|c+2}"
                  " + M_{c+1,c+1,c|c}"
              )),
    ProofStep("3x1", "a,c,b|c", "b<c, a>c+1", "a,c,b|c", "a,c,b|c+1", "V",
              "M_{a,c,b|c+1}",
              "M_{a,c,b|c} + M_{a,c+1,b|c+1}"),
    ProofStep("3x1", "a,c,b|c", "b<c, a=c+1", "c+1,c,b|c", "c+1,c,b|c+2", "L2V",
              "M_{c+1,c,b|c+2}",
              "M_{c+1,c,b|c} + M_{c+1,c+1,b|c+1} + M_{c+2,c+1,b|c+2}"),
    ProofStep("3x1", "a,c,b|c", "b<c, a=c", "c,c,b|c", "c,c,b|c+1", "V",
              "M_{c,c,b|c+1}",
              "M_{c,c,b|c} + M_{c,c+1,b|c+1} + M_{c+1,c,b|c+1}"),
    ProofStep("3x1", "a,c,b|c", "b<c, a<c", "a,c,b|c", "a,c,b|c+1", "V",
              "M_{a,c,b|c+1} + M_{c,a,b|c+1}",
              "M_{a,c,b|c} + M_{a,c+1,b|c+1} + M_{c,a,b|c} + M_{c+1,a,b|c+1}"),
    ProofStep("3x1", "b,c,a|c", "b>c+1, a>b", "b,c,a|c", "b,c,a|c+1", "V",
              "M_{b,c,a|c+1} + M_{b,a,c|c+1} + M_{a,b,c|c+1} + M_{a,c,b|c+1}",
              (
                  "M_{b,c,a|c} + M_{b,a,c|c} + M_{a,b,c|c} + M_{a,c,b|c}"
                  " + M_{b,c+1,a|c+1} + M_{b,a,c+1|c+1} + M_{a,b,c+1|c+1}"
                  " + M_{a,c+1,b|c+1}"
              )),
    ProofStep("3x1", "b,c,a|c", "b=c+1, a>c+2", "c+1,c,a|c", "c+1,c,a|c+2", "L2V",
              (
                  "M_{c+1,c,a|c+2} + M_{a,c,c+1|c+2} + M_{c+1,a,c|c+2}"
                  " + M_{a,c+1,c|c+2}"
              ),
              (
                  "M_{c+1,c,a|c} + M_{c+2,c+1,a|c+2} + M_{c+1,c+1,a|c+1}"
                  " + M_{a,c,c+1|c} + M_{a,c+1,c+2|c+2} + M_{a,c+1,c+1|c+1}"
                  " + M_{c+1,a,c|c} + M_{c+1,a,c+2|c+2} + M_{c+1,a,c+1|c+1}"
                  " + M_{a,c+1,c|c} + M_{a,c+2,c+1|c+2} + M_{a,c+1,c+1|c+1}"
              )),
    ProofStep("3x1", "b,c,a|c", "b=c+1, a=c+2", "c+1,c,c+2|c", "c+2,c+1,c+2|c", "L2V*",
              "M_{c+2,c+1,c+2|c} + M_{c+2,c+2,c+1|c}",
              (
                  "M_{c+1,c,c+2|c} + M_{c+2,c,c+1|c} + M_{c+1,c+1,c+2|c+1}"
                  " + M_{c+2,c+1,c+1|c+1} + M_{c+2,c+1,c+2|c+2} + M_{c+2,c+1,c|c}"
                  " + M_{c+1,c+2,c|c} + M_{c+1,c+2,c+1|c+1} + M_{c+2,c+1,c+1|c+1}"
                  " + M_{c+2,c+2,c+1|c+2}"
              )),
    ProofStep("3x1", "b,c,a|c", "b=c, a>c+1", "c,c,a|c", "c,c,a|c+1", "V",
              "M_{c,c,a|c+1} + M_{c,a,c|c+1} + M_{a,c,c|c+1}",
              (
                  "M_{c,c,a|c} + M_{c+1,c,a|c+1} + M_{c,c+1,a|c+1} + M_{c,a,c|c}"
                  " + M_{c+1,a,c|c+1} + M_{c,a,c+1|c+1} + M_{a,c,c|c}"
                  " + M_{a,c+1,c|c+1} + M_{a,c,c+1|c+1}"
              )),
    ProofStep("3x1", "b,c,a|c", "b=c, a=c+1", "c,c,c+1|c", "c+1,c+1,c+1|c", "L2V*",
              "M_{c+1,c+1,c+1|c}",
              (
                  "M_{c,c,c+1|c} + M_{c+1,c,c|c} + M_{c,c+1,c|c} + M_{c,c+1,c+1|c+1}"
                  " + M_{c+1,c,c+1|c+1} + M_{c+1,c+1,c|c+1}"
              ),
              note="display interleaves 'P_mu = M_{c+1,c+1,c+1|c}' with the projection"),
    ProofStep("3x1", "b,c,a|c", "b<c, a>c+1", "b,c,a|c", "b,c,a|c+1", "V",
              (
                  "M_{b,c,a|c+1} + M_{c,b,a|c+1} + M_{a,b,c|c+1} + M_{a,c,b|c+1}"
                  " + M_{b,a,c|c+1} + M_{c,a,b|c+1}"
              ),
              (
                  "M_{b,c,a|c} + M_{b,c+1,a|c+1} + M_{c,b,a|c} + M_{c+1,b,a|c+1}"
                  " + M_{a,b,c|c} + M_{a,b,c+1|c+1} + M_{a,c,b|c} + M_{a,c+1,b|c+1}"
                  " + M_{b,a,c|c} + M_{b,a,c+1|c+1} + M_{c,a,b|c} + M_{c+1,a,b|c+1}"
              )),
    ProofStep("3x1", "b,c,a|c", "b<c, a=c+1, b=c-1", "c-1,c,c+1|c", "c-1,c+1,c+1|c", "V*",
              "M_{c-1,c+1,c+1|c} + M_{c+1,c-1,c+1|c} + M_{c+1,c+1,c-1|c}",
              (
                  "M_{c-1,c,c+1|c} + M_{c-1,c+1,c|c} + M_{c-1,c+1,c+1|c+1}"
                  " + M_{c,c-1,c+1|c} + M_{c+1,c-1,c|c} + M_{c+1,c-1,c+1|c+1}"
                  " + M_{c,c+1,c-1|c} + M_{c+1,c,c-1|c} + M_{c+1,c+1,c-1|c+1}"
              )),
    ProofStep("3x1", "b,c,a|c", "b<c, a=c+1, b<c-1", "b,c,c+1|c", "b-1,c,c+1|c", "V",
              (
                  "M_{b-1,c,c+1|c} + M_{b-1,c+1,c|c} + M_{c,b-1,c+1|c}"
                  " + M_{c+1,b-1,c|c} + M_{c,c+1,b-1|c} + M_{c+1,c,b-1|c}"
              ),
              (
                  "M_{b,c,c+1|c} + M_{b,c+1,c|c} + M_{c,b,c+1|c} + M_{c,c+1,b|c}"
                  " + M_{c+1,b,c|c} + M_{c+1,b,c|c}"
              )),
    ProofStep("3x1", "b,c,a|c", "b<c, a<c, a>b", "b,c,a|c", "b,c,a|c+1", "V",
              "M_{b,c,a|c+1} + M_{c,b,a|c+1} + M_{a,c,b|c+1} + M_{c,a,b|c+1}",
              (
                  "M_{b,c,a|c} + M_{b,c+1,a|c+1} + M_{c,b,a|c} + M_{c+1,b,a|c+1}"
                  " + M_{a,c,b|c} + M_{a,c+1,b|c+1} + M_{c,a,b|c} + M_{c+1,a,b|c+1}"
              )),
    ProofStep("3x1", "c,a,b|c", "b>c+1, a>b", "c,a,b|c", "c+1,a,b|c", "V*",
              "M_{c+1,a,b|c} + M_{a,c+1,b|c} + M_{b,a,c+1|c} + M_{a,b,c+1|c}",
              (
                  "M_{c,a,b|c} + M_{c+1,a,b|c+1} + M_{a,c,b|c}"
                  " + M_{a,c+1,b|c+1} M_{b,a,c|c} + M_{b,a,c+1|c+1} + M_{a,b,c|c}"
                  " + M_{a,b,c+1|c+1}"
              )),
    ProofStep("3x1", "c,a,b|c", "b>c+1, a=b", "c,b,b|c", "c+1,b,b|c", "V*",
              "M_{c+1,b,b|c} + M_{b,c+1,b|c} + M_{b,b,c+1|c}",
              (
                  "M_{c,b,b|c} + M_{c+1,b,b|c+1} + M_{b,c,b|c} + M_{b,c+1,b|c+1}"
                  " + M_{b,b,c|c} + M_{b,b,c+1|c+1}"
              )),
    ProofStep("3x1", "c,a,b|c", "b=c+1, a>c+1", "c,a,c+1|c", "c+1,a,c+1|c", "V*",
              "M_{c+1,a,c+1|c} + M_{a,c+1,c+1|c}",
              (
                  "M_{c,a,c+1|c} + M_{c+1,a,c|c} + M_{c+1,a,c+1|c+1} + M_{a,c,c+1|c}"
                  " + M_{a,c+1,c|c} + M_{a,c+1,c+1|c+1}"
              )),
    ProofStep("3x1", "c,a,b|c", "b=c+1, a=c+1", "c,c+1,c+1|c", "c+1,c+1,c+1|c", "V*",
              "M_{c+1,c+1,c+1|c}",
              (
                  "M_{c,c+1,c+1|c} + M_{c+1,c,c+1|c} + M_{c+1,c+1,c|c}"
                  " + M_{c+1,c+1,c+1|c+1}"
              )),
    ProofStep("3x1", "c,a,b|c", "b<c, a>c+1", "c,a,b|c", "c+1,a,b|c", "V*",
              "M_{c+1,a,b|c} + M_{a,c+1,b|c}",
              "M_{c,a,b|c} + M_{c+1,a,b|c+1} + M_{a,c,b|c} + M_{a,c+1,b|c+1}"),
    ProofStep("3x1", "c,a,b|c", "b<c, a=c+1", "c,c+1,b|c", "c+1,c+1,b|c", "V*",
              "M_{c+1,c+1,b|c}",
              "M_{c,c+1,b|c} + M_{c+1,c+1,b|c+1}"),
    ProofStep("3x1", "c,a,b|c", "b<c, a<c", "c,a,b|c", "c,a,b|c+1", "V",
              "M_{c,a,b|c+1}",
              "M_{c,a,b|c} + M_{c+1,a,b|c+1}"),
    ProofStep("3x1", "c,b,a|c", "b>c+1, a>b", "c,b,a|c", "c,b,a|c+1", "V",
              (
                  "M_{c,b,a|c+1} + M_{b,c,a|c+1} + M_{c,a,b|c+1} + M_{b,a,c|c+1}"
                  " + M_{a,c,b|c+1} + M_{a,b,c|c+1}"
              ),
              (
                  "M_{c,b,a|c} + M_{c+1,b,a|c+1} + M_{b,c,a|c} M_{b,c+1,a|c+1}"
                  " + M_{c,a,b|c} + M_{c+1,a,b|c+1} M_{b,a,c|c} + M_{b,a,c+1|c+1}"
                  " + M_{a,c,b|c} M_{a,c+1,b|c+1} + M_{a,b,c|c} + M_{a,b,c+1|c+1}"
              )),
    ProofStep("3x1", "c,b,a|c", "b=c+1, a>c+1", "c,c+1,a|c", "c+1,c+1,a|c", "V*",
              "M_{c+1,c+1,a|c} + M_{c+1,a,c+1|c} + M_{a,c+1,c+1}",
              (
                  "M_{c,c+1,a|c} + M_{c+1,c,a|c} + M_{c+1,c+1,a|c+1} M_{c,a,c+1|c}"
                  " + M_{c+1,a,c|c} + M_{c+1,a,c+1|c+1} M_{a,c,c+1|c} + M_{a,c+1,c|c}"
                  " + M_{a,c+1,c+1|c+1}"
              )),
    ProofStep("3x1", "c,b,a|c", "b<c, a>c+1", "c,b,a|c", "c,b,a|c+1", "V",
              (
                  "M_{c,b,a|c+1} + M_{c,a,b|c+1} + M_{a,b,c|c+1} + M_{a,b,c|c+1}"
                  " + M_{a,c,b|c+1}"
              ),
              (
                  "M_{c,b,a|c} + M_{c+1,b,a|c+1} + M_{c,a,b|c}"
                  " + M_{c+1,a,b|c+1} M_{a,b,c|c} + M_{a,b,c+1|c+1} + M_{a,c,b|c}"
                  " + M_{a,c+1,b|c+1}"
              )),
    ProofStep("3x1", "c,b,a|c", "b<c, a=c+1", "c,b,c+1|c", "c+1,b,c+1|c", "V*",
              "M_{c+1,b,c+1|c} + M_{c+1,c+1,b|c}",
              (
                  "M_{c,b,c+1|c} + M_{c,b,c|c} + M_{c+1,b,c+1|c+1} M_{c,c+1,b|c}"
                  " + M_{c,b,c|c} + M_{c+1,c+1,b|c+1}"
              )),
    ProofStep("3x1", "c,b,a|c", "b<c, a<c, a>b", "c,b,a|c", "c,b,a|c+1", "V",
              "M_{c,b,a|c+1} + M_{c,a,b|c+1}",
              "M_{c,b,a|c} + M_{c+1,b,a|c+1} + M_{c,a,b|c} + M_{c+1,a,b,c+1}"),
    ProofStep("2x2", "a,b|b,a", "b<a-1", "a,b|b,a", "a,b|b+1,a+1", "L2V",
              "M_{a,b|b+1,a+1}",
              (
                  "M_{a,b|b,a} + M_{a+1,b|b,a+1} + M_{a,b+1|b+1,a}"
                  " + M_{a+1,b+1|b+1,a+1}"
              )),
    ProofStep("2x2", "a,b|b,a", "b=a-1", "a,a-1|a-1,a+2", "a,a-1|a+1,a+2", "L2V",
              "M_{a,a-1|a+1,a+2}",
              "M_{a,a-1|a-1,a+2} + M_{a,a|a,a+2} + M_{a+1,a|a+1,a+2}"),
    ProofStep("2x2", "a,b|b,a", "b=a-1", "a,a-1|a-1,a", "a,a-1|a-1,a+2", "L2V",
              "M_{a,a-1|a-1,a+2} + M_{a,a|a,a+2} + M_{a+1,a|a+1,a+2}",
              (
                  "M_{a,a-1|a-1,a} + M_{a+1,a-1|a-1,a+1} + M_{a,a|a,a}"
                  " + M_{a,a+1|a,a+1} + 2M_{a+1,a|a,a+1} + M_{a+1,a|a+1,a}"
                  " + M_{a+1,a+1|a+1,a+1} + M_{a+2,a|a,a+2} + M_{a+2,a+1|a+1,a+2}"
              )),
    ProofStep("2x2", "a,b|b,a", "b=a", "a,a|a,a", "a,a|a+1,a+1", "L2V",
              "M_{a,a|a+1,a+1}",
              (
                  "M_{a,a|a,a} + M_{a+1,a|a,a+1} + M_{a,a+1|a+1,a}"
                  " + M_{a+1,a+1|a+1,a+1} + M_{a+1,a|a+1,a} + M_{a,a+1|a,a+1}"
              )),
    ProofStep("2x2", "a,b|a,b", "b<a-1", "a,b|a,b", "a,b|a+1,b+1", "L2V",
              "M_{a,b|b+1,a+1} + M_{a,b|a+1,b+1}",
              (
                  "M_{a,b|a,b} + M_{a+1,b|a+1,b} + M_{a,b+1|a,b+1}"
                  " + M_{a+1,b+1|a+1,b+1} + M_{a,b|b,a} + M_{a+1,b|b,a+1}"
                  " + M_{a,b+1|b+1,a} + M_{a+1,b+1|b+1,a+1}"
              )),
    ProofStep("2x2", "a,b|a,b", "b=a-1", "a,a-1|a,a-1", "a,a-1|a+1,a+1", "L3V",
              "M_{a,a-1|a+1,a+1}",
              (
                  "M_{a,a-1|a,a-1} + M_{a+1,a|a,a+1} + M_{a+1,a|a+1,a}"
                  " + M_{a+1,a-1|a-1,a+1} + M_{a+1,a-1|a+1,a-1} + M_{a,a|a,a}"
                  " + M_{a,a-1|a-1,a}"
              )),
    ProofStep("2x2", "b,a|b,a", "b<a-1", "b,a|b,a", "b,a|b+1,a+1", "L2V",
              "M_{b,a|b+1,a+1} + M_{a,b|b+1,a+1}",
              (
                  "M_{b,a|b,a} + M_{b,a+1|b,a+1} + M_{b+1,a|b+1,a}"
                  " + M_{b+1,a+1|b+1,a+1} + M_{a,b|b,a} + M_{a+1,b|b,a+1}"
                  " + M_{a,b+1|b+1,a} + M_{a+1,b+1|b+1,a+1}"
              )),
    ProofStep("2x2", "b,a|b,a", "b=a-1", "a,a|a-1,a", "a+1,a+1|a-1,a", "L2V*",
              "M_{a+1,a+1|a-1,a}",
              "M_{a,a|a-1,a} + M_{a+1,a|a-1,a+1} + M_{a,a+1|a-1,a+1}"),
    ProofStep("2x2", "b,a|b,a", "b=a-1", "a-1,a|a-1,a", "a,a|a-1,a", "V*",
              "M_{a,a|a-1,a} + M_{a+1,a|a-1,a+1} + M_{a,a+1|a-1,a+1}",
              (
                  "M_{a-1,a|a-1,a} + M_{a,a-1|a-1,a} + M_{a,a|a,a}"
                  " + M_{a-1,a+1|a-1,a+1} + M_{a,a+1|a,a+1} + M_{a+1,a-1|a-1,a+1}"
                  " + M_{a+1,a|a,a+1}"
              )),
    ProofStep("2x2", "b,a|a,b", "b<a-1", "b,a|a,b", "b,a|a+1,b+1", "L2V",
              (
                  "M_{b,a|a+1,b+1} + M_{b,a|b+1,a+1} + M_{a,b|a+1,b+1}"
                  " + M_{a,b|b+1,a+1}"
              ),
              (
                  "M_{b,a|a,b} + M_{b,a+1|a+1,b} + M_{b+1,a|a,b+1}"
                  " + M_{b+1,a+1|a+1,b+1} + M_{b,a|b,a} + M_{b,a+1|b,a+1}"
                  " + M_{b+1,a|b+1,a} + M_{b+1,a+1|b+1,a+1} + M_{a,b|a,b}"
                  " + M_{a+1,b|a+1,b} + M_{a,b+1|a,b+1} + M_{a+1,b+1|a+1,b+1}"
                  " + M_{a,b|b,a} + M_{a+1,b|b,a+1} + M_{a,b+1|b+1,a}"
                  " + M_{a+1,b+1|b+1,a+1}"
              )),
    ProofStep("2x2", "b,a|a,b", "b=a-1", "a-1,a|a,a-1", "a-1,a|a+1,a+1", "L3V",
              "M_{a-1,a|a+1,a+1} + M_{a,a-1|a+1,a+1}",
              (
                  "M_{a-1,a|a,a-1} + M_{a,a+1|a,a+1} + M_{a,a+1|a+1,a}"
                  " + M_{a-1,a+1|a+1,a-1} + M_{a-1,a+1|a-1,a+1} + M_{a-1,a|a-1,a}"
                  " + M_{a,a-1|a,a-1} + M_{a+1,a|a,a+1} + M_{a+1,a|a+1,a}"
                  " + M_{a+1,a-1|a-1,a+1} + M_{a+1,a-1|a+1,a-1} + 2M_{a,a|a,a}"
                  " + M_{a,a-1|a-1,a}"
              )),
)
