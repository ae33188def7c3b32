"""Reviewed discrepancies between the transcribed displays and their derivations.

Keys are ``(source, case id)``.  ``kinds`` must match what the validator
rediscovers; a mismatch in either direction fails verification.  Projective
branches listed here are never used as a flag source.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Known:
    kinds: tuple
    why: str


KNOWN = {
    ('gl(3|1) projectives', '{a,b,c|c} [b=c, a=c]'): Known(
        ('missing-term', 'repeated-term'),
        (
            'M_{c+1,c,c|c+1} is written twice and M_{c,c+1,c|c+1} never; the derivation has '
            'each once'
        ),
    ),
    ('gl(3|1) projectives', '{b,c,a|c} [b=c+1, a>c+2]'): Known(
        ('extra-term', 'missing-term'),
        (
            'M_{c+1,a,c+2|c+2} should be M_{c+2,a,c+1|c+2}; the doubled M_{a,c+1,c+1|c+1} is '
            'a genuine multiplicity 2'
        ),
    ),
    ('gl(3|1) projectives', '{b,c,a|c} [b<c, a=c+1, b<c-1]'): Known(
        ('missing-term', 'repeated-term'),
        (
            'M_{c+1,b,c|c} is written twice; the derivation has it once plus four terms of '
            'the form M_{..|c+1} and M_{c+1,c,b|c}'
        ),
    ),
    ('gl(3|1) projectives', '{c,a,b|c} [b<c, a=c+1]'): Known(
        ('missing-term',),
        (
            'M_{c+1,c,b|c} is absent although it is certified and the projection of the '
            'printed P_mu contains it'
        ),
    ),
    ('gl(3|1) projectives', '{c,b,a|c} [b<c, a=c+1]'): Known(
        ('missing-term', 'out-of-block-term'),
        (
            'M_{c,b,c|c} (written twice) is not in the block; the derivation has '
            'M_{c+1,b,c|c} and M_{c+1,c,b|c} instead'
        ),
    ),
    ('gl(3|1) projectives', '{c,b,a|c} [b<c, a<c, a>b]'): Known(
        ('malformed-term', 'missing-term'),
        (
            'last term M_{c+1,a,b,c+1} has a comma where the bar belongs; read as '
            'M_{c+1,a,b|c+1} it agrees'
        ),
    ),
    ('gl(2|2) composition series', '{a,b|b,a} [b=a-1]'): Known(
        ('missing-term',),
        (
            'reciprocity with the b<a-1 projective flags at b=a-2 forces L_{a-2,a|a-2,a}, '
            'L_{a-2,a|a,a-2}, L_{a,a-2|a-2,a}, L_{a,a-2|a,a-2}'
        ),
    ),
    ('gl(2|2) composition series', '{a,b|a,b} [b=a-1]'): Known(
        ('missing-term',),
        (
            'reciprocity with the b<a-1 projective flags at b=a-2 forces L_{a-2,a|a,a-2} and '
            'L_{a,a-2|a,a-2}'
        ),
    ),
    ('gl(2|2) composition series', '{b,a|b,a} [b<a-2]'): Known(
        ('extra-term', 'missing-term'),
        (
            'L_{a-1,b-1|a-1,b-1} should be L_{b-1,a-1|b-1,a-1}; the printed weight is not '
            'below M_{b,a|b,a}'
        ),
    ),
    ('gl(2|2) composition series', '{b,a|b,a} [b=a-1]'): Known(
        ('missing-term',),
        (
            'reciprocity with the b<a-1 projective flags at b=a-2 forces L_{a-2,a|a-2,a} and '
            'L_{a-2,a|a,a-2}'
        ),
    ),
    ('gl(2|2) composition series', '{b,a|a,b} [b=a-1]'): Known(
        ('missing-term',),
        'reciprocity with P_{b,a|a,b} at b=a-2 forces L_{a-2,a|a,a-2}',
    ),
    ('proof steps', '{b,a,c|c} [b=c+1, a>c+2] Pr_{c+1,a,c|c}(P_{c+1,a,c|c+2} x L2V)'): Known(
        ('pmu-inconsistent', 'printed-pmu-missing-term', 'printed-pmu-repeated-term'),
        'the printed P_mu repeats a term; the projection itself is correct',
    ),
    ('proof steps', '{b,a,c|c} [b=c, a=c+1] Pr_{c,c+1,c|c}(P_{c,c+1,c|c+2} x L3V*)'): Known(
        ('extra-term', 'pmu-inconsistent', 'rep-mismatch'),
        'lam - mu = 2eps is not a weight of L3V*; with L2V the display is reproduced exactly',
    ),
    ('proof steps', '{b,a,c|c} [b<c, a=c+1] Pr_{b,c+1,c|c}(P_{b,c+1,c|c+2} x L2V)'): Known(
        ('pmu-inconsistent', 'printed-pmu-missing-term', 'printed-pmu-out-of-block-term'),
        (
            'the printed P_mu contains M_{c+1,a,b|c+2}, outside the block; the projection '
            'itself is correct'
        ),
    ),
    ('proof steps', '{b,c,a|c} [b=c+1, a>c+2] Pr_{c+1,c,a|c}(P_{c+1,c,a|c+2} x L2V)'): Known(
        ('extra-term', 'missing-term', 'pmu-inconsistent'),
        'same slip as the table branch: M_{c+1,a,c+2|c+2} for M_{c+2,a,c+1|c+2}',
    ),
    ('proof steps', '{b,c,a|c} [b<c, a=c+1, b<c-1] Pr_{b,c,c+1|c}(P_{b-1,c,c+1|c} x V)'): Known(
        ('missing-term', 'pmu-inconsistent', 'printed-pmu-missing-term', 'repeated-term'),
        'the printed P_mu treats the atypical mu as typical and so misses certified weights',
    ),
    ('proof steps', '{c,a,b|c} [b<c, a=c+1] Pr_{c,c+1,b|c}(P_{c+1,c+1,b|c} x V*)'): Known(
        ('missing-term', 'pmu-inconsistent'),
        'M_{c+1,c,b|c} is dropped from the projection of the printed P_mu',
    ),
    ('proof steps', '{c,b,a|c} [b=c+1, a>c+1] Pr_{c,c+1,a|c}(P_{c+1,c+1,a|c} x V*)'): Known(
        ('printed-pmu-malformed-term', 'printed-pmu-missing-term'),
        'the printed P_mu has M_{a,c+1,c+1} without a bar; the projection itself is correct',
    ),
    ('proof steps', '{c,b,a|c} [b<c, a>c+1] Pr_{c,b,a|c}(P_{c,b,a|c+1} x V)'): Known(
        ('pmu-inconsistent', 'printed-pmu-repeated-term'),
        'the printed P_mu repeats M_{a,b,c|c+1}; the projection itself is correct',
    ),
    ('proof steps', '{c,b,a|c} [b<c, a=c+1] Pr_{c,b,c+1|c}(P_{c+1,b,c+1|c} x V*)'): Known(
        ('missing-term', 'out-of-block-term', 'pmu-inconsistent'),
        'same slip as the table branch: M_{c,b,c|c} is outside the block',
    ),
    ('proof steps', '{c,b,a|c} [b<c, a<c, a>b] Pr_{c,b,a|c}(P_{c,b,a|c+1} x V)'): Known(
        ('malformed-term', 'missing-term'),
        'same malformed last term as the table branch',
    ),
}


def is_trusted(source: str, case_id: str) -> bool:
    return (source, case_id) not in KNOWN
