"""Audit the closed-form free-hydrogen oscillator strengths.

Each printed formula is checked against the solver and against exact
rational arithmetic; mismatches are characterized and listed.

Run with ``python demos/closed_form_audit.py`` (about a minute).
"""
from shellconf.errata import (
    audit_alpha_series,
    audit_f_formulas,
    audit_z_scaling,
    errata_report,
    five_g_sign_check,
)

audits = audit_f_formulas()
alpha = audit_alpha_series()
zs = audit_z_scaling()
print(errata_report(audits, alpha, zs))

########################################
## which sign belongs in the 5g -> ns polynomial?
########################################

for sign, ratios in five_g_sign_check().items():
    print(sign, sorted({str(r) for r in ratios})[:4])

# the minus sign leaves a constant ratio, so only the prefactor is off
