"""One-probe identification of hidden logic gates.

A hidden monadic gate U is probed with the single input A s (the true
vector prefiltered by a square root of NOT); a hidden dyadic gate T with
(A(x)A)(s(x)s). The output's real and imaginary coefficients along s and n
form a four-number signature that distinguishes all four monadic gates and
the seven named dyadic gates. The oracle is received as an opaque matrix,
never as a gate name. Requires an orthonormal basis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import TruthBasis
from .errors import DimensionMismatch, NonOrthogonalBasis
from .operators import dyadic_operator, max_norm
from .scalar_logic import ALL_DYADIC_TABLES, TRUE, DyadicTable
from .srn import ALPHA, BETA, sqrt_not

UNKNOWN = "UNKNOWN"
AMBIGUOUS = "AMBIGUOUS"

DEFAULT_CLASSIFY_TOL = 1e-6

# (re_s, re_n, im_s, im_n) of the probe output for each gate, from expanding
# oracle(A s) = oracle(alpha*s + beta*n) with alpha = (1+i)/2, beta = (1-i)/2.
MONADIC_REFERENCE_SIGNATURES = {
    "CID": (1.0, 0.0, 0.0, 0.0),
    "CNOT": (0.0, 1.0, 0.0, 0.0),
    "ID": (0.5, 0.5, 0.5, -0.5),
    "NOT": (0.5, 0.5, -0.5, 0.5),
}

DYADIC_REFERENCE_SIGNATURES = {
    "AND": (0.0, 1.0, 0.5, -0.5),
    "OR": (1.0, 0.0, 0.5, -0.5),
    "IMPL": (0.5, 0.5, 0.0, 0.0),
    "EQUI": (0.0, 1.0, 0.0, 0.0),
    "XOR": (1.0, 0.0, 0.0, 0.0),
    "NAND": (1.0, 0.0, -0.5, 0.5),
    "NOR": (0.0, 1.0, -0.5, 0.5),
}


@dataclass(frozen=True)
class GateSignature:
    re_s: float
    re_n: float
    im_s: float
    im_n: float
    residual: float  # norm of the output component outside span{s, n}

    @property
    def coefficients(self) -> tuple[float, float, float, float]:
        return (self.re_s, self.re_n, self.im_s, self.im_n)


@dataclass(frozen=True)
class DiagnosisResult:
    verdict: str
    signature: GateSignature
    distance: float


def _require_orthonormal(basis: TruthBasis):
    if not basis.orthonormal:
        raise NonOrthogonalBasis(f"diagnosis requires epsilon = 0, got epsilon = {basis.epsilon}")


def _signature_of_output(out: np.ndarray, basis: TruthBasis) -> GateSignature:
    # coefficient extraction via the duals; for epsilon = 0 they equal s, n
    # but one code path serves both.
    re, im = np.real(out), np.imag(out)
    re_s, re_n = float(basis.y @ re), float(basis.z @ re)
    im_s, im_n = float(basis.y @ im), float(basis.z @ im)
    recon = (re_s + 1j * im_s) * basis.s + (re_n + 1j * im_n) * basis.n
    return GateSignature(re_s, re_n, im_s, im_n, residual=max_norm(out - recon))


def probe_monadic(oracle: np.ndarray, basis: TruthBasis) -> GateSignature:
    """Signature of oracle @ (A s) for a hidden Q x Q gate."""
    _require_orthonormal(basis)
    oracle = np.asarray(oracle)
    if oracle.shape != (basis.dim, basis.dim):
        raise DimensionMismatch(f"monadic oracle must be {basis.dim}x{basis.dim}, got {oracle.shape}")
    out = oracle @ (sqrt_not(basis).A @ basis.s)
    return _signature_of_output(out, basis)


def probe_dyadic(oracle: np.ndarray, basis: TruthBasis) -> GateSignature:
    """Signature of oracle @ (A(x)A)(s(x)s) for a hidden Q x Q^2 gate."""
    _require_orthonormal(basis)
    oracle = np.asarray(oracle)
    if oracle.shape != (basis.dim, basis.dim * basis.dim):
        raise DimensionMismatch(
            f"dyadic oracle must be {basis.dim}x{basis.dim ** 2}, got {oracle.shape}"
        )
    a = sqrt_not(basis).A
    out = oracle @ (np.kron(a, a) @ np.kron(basis.s, basis.s))
    return _signature_of_output(out, basis)


def _classify(sig: GateSignature, references: dict, tol: float) -> DiagnosisResult:
    dists = {
        name: max(abs(c - r) for c, r in zip(sig.coefficients, ref))
        for name, ref in references.items()
    }
    hits = sorted((d, name) for name, d in dists.items() if d < tol)
    if not hits:
        return DiagnosisResult(UNKNOWN, sig, min(dists.values()))
    if len(hits) > 1:
        return DiagnosisResult(AMBIGUOUS, sig, hits[0][0])
    return DiagnosisResult(hits[0][1], sig, hits[0][0])


def classify_monadic(sig: GateSignature, tol: float = DEFAULT_CLASSIFY_TOL) -> DiagnosisResult:
    return _classify(sig, MONADIC_REFERENCE_SIGNATURES, tol)


def classify_dyadic(sig: GateSignature, tol: float = DEFAULT_CLASSIFY_TOL) -> DiagnosisResult:
    return _classify(sig, DYADIC_REFERENCE_SIGNATURES, tol)


def symbolic_dyadic_signature(table: DyadicTable) -> tuple[float, float, float, float]:
    """Exact probe signature of a dyadic table, without building any matrix.

    T(A(x)A)(s(x)s) = alpha^2*e + alpha*beta*f + alpha*beta*g + beta^2*h,
    so the s coefficient collects the weights of the TRUE slots and the
    n coefficient those of the FALSE slots.
    """
    weights = (ALPHA * ALPHA, ALPHA * BETA, ALPHA * BETA, BETA * BETA)
    cs = sum(w for w, out in zip(weights, table.outputs) if out == TRUE)
    cn = sum(w for w, out in zip(weights, table.outputs) if out != TRUE)
    return (complex(cs).real, complex(cn).real, complex(cs).imag, complex(cn).imag)


def enumerate_dyadic_signatures(
    basis: TruthBasis,
) -> tuple[dict[str, GateSignature], list[list[str]]]:
    """Probe signatures of all 16 dyadic gates, grouped into collision classes.

    Returns (name -> signature, collision classes); each class lists the
    gates sharing one signature, classes of size >= 2 being genuine
    one-probe ambiguities (e.g. the constant-true gate collides with XOR).
    """
    _require_orthonormal(basis)
    signatures: dict[str, GateSignature] = {}
    groups: dict[tuple, list[str]] = {}
    for table in ALL_DYADIC_TABLES:
        sig = probe_dyadic(dyadic_operator(basis, table), basis)
        signatures[table.name] = sig
        key = tuple(round(c, 9) for c in sig.coefficients)
        groups.setdefault(key, []).append(table.name)
    classes = sorted(groups.values(), key=lambda names: (-len(names), names))
    return signatures, classes
