"""Fixed coefficients for the Lanczos rational approximation of log Gamma.

Provenance: g = 607/128, N = 15 coefficient set computed by P. Godfrey
(2001, "A note on the computation of the convergent Lanczos complex Gamma
approximation"), the same set shipped by Boost.Math and the GNU Scientific
Library.  Quoted accuracy: relative error below 1e-13 (empirically around
1e-15 near the real axis) for Re z > 0 in IEEE binary64.

The approximation is

    Gamma(z) = sqrt(2*pi) * (z + g - 1/2)**(z - 1/2) * exp(-(z + g - 1/2))
               * (C[0] + sum_{k>=1} C[k] / (z - 1 + k))

valid for Re z > 1/2; the reflection formula covers the left half plane.
"""

LANCZOS_G = 607.0 / 128.0  # = 4.7421875, exact in binary64

LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)
