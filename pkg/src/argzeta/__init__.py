"""argzeta: numerical toolkit for the argument of the Riemann zeta function.

Evaluation of zeta, the Riemann-Siegel theta and Hardy Z functions, the
normalized critical-line argument S(t) by two independent methods, signed
smoothing kernels with certified properties, the kernel-convolution
identity for log zeta, squarefree resonator moments with exact Rankin-type
combinatorics, and Monte-Carlo experiments for the distribution of S(t).
"""

__version__ = "0.1.0"
