"""Exact arithmetic for twisted tensor Euler factors of real-quadratic
Hilbert eigenforms, ordinary Eisenstein families over the Iwasawa algebra,
interpolation Euler factors at a split prime, and unramified Rankin-Selberg
local zeta integrals.

The subpackages are largely independent layers:

* :mod:`padicasai.numberfield`, :mod:`padicasai.padic`,
  :mod:`padicasai.series`, :mod:`padicasai.symbolic` -- arithmetic kernels
  (rationals, number fields, p-adics with precision tracking, truncated
  power series, multivariate rational functions).
* :mod:`padicasai.characters` -- Dirichlet characters with exact cyclotomic
  values and the quadratic character of a real quadratic field.
* :mod:`padicasai.eigendata`, :mod:`padicasai.formdata` -- eigenvalue
  packets, file ingestion, quadratic base change.
* :mod:`padicasai.asai` -- degree-4/3/1 Euler factors, the factorization
  checker, twisted Dirichlet series, numeric evaluation and the pole probe.
* :mod:`padicasai.iwasawa`, :mod:`padicasai.eisfamily` -- branch-decomposed
  power series over Z_p, the p-adic zeta function, Eisenstein q-expansion
  families and the depletion/stabilization calculus.
* :mod:`padicasai.interp` -- stabilized Satake data along a family stub and
  the interpolation Euler factor with its bracket split.
* :mod:`padicasai.localzeta` -- symbolic verification of the unramified
  local zeta-integral identities.
"""

__version__ = "0.1.0"
