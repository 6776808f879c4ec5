"""Quadratic fields: forms, class groups, and rank certificates."""

from .certify import (
    RankCertificate,
    certify_m_rank,
    narrow_torsion_class,
    verify_rank_certificate,
)
from .classgroup import (
    ClassGroupStructure,
    class_group,
    class_number_neg,
    m_rank,
    narrow_class_representatives,
    reduced_forms_neg,
    reduced_forms_pos,
)
from .forms import (
    FundDisc,
    QuadForm,
    class_order_of_form,
    compose,
    conductor_and_disc,
    cycle_of,
    form,
    fundamental_discriminant,
    is_equivalent,
    is_principal,
    opposite,
    power,
    principal_form,
    reduce_form,
    reduce_neg,
    reduce_pos,
    two_rank_genus,
)
from .ideals import MthPowerClass, ideal_class_from_mth_power, ideal_to_form

__all__ = [
    "ClassGroupStructure",
    "FundDisc",
    "MthPowerClass",
    "QuadForm",
    "RankCertificate",
    "certify_m_rank",
    "class_group",
    "class_number_neg",
    "class_order_of_form",
    "compose",
    "conductor_and_disc",
    "cycle_of",
    "form",
    "form_from_json",
    "fundamental_discriminant",
    "ideal_class_from_mth_power",
    "ideal_to_form",
    "is_equivalent",
    "is_principal",
    "m_rank",
    "narrow_class_representatives",
    "narrow_torsion_class",
    "opposite",
    "power",
    "principal_form",
    "reduce_form",
    "reduce_neg",
    "reduce_pos",
    "reduced_forms_neg",
    "reduced_forms_pos",
    "two_rank_genus",
    "verify_rank_certificate",
]

from .forms import form_from_json, form_to_json  # noqa: E402
