"""Dense multipartite state vectors and local unitary maps.

A pure state of N parties with local dimensions ``dims = (d_1, ..., d_N)``
is stored as a dense complex array of length ``prod(dims)``, indexed in
row-major order by the multi-index ``(i_1, ..., i_N)``.  Constructors
normalize; the raw variant :func:`make_state_raw` is the single explicit
exception.  All public types are immutable and safe to share between
threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "ValidationError",
    "NumericError",
    "StateVector",
    "LocalUnitary",
    "make_state",
    "make_state_raw",
    "bell_state",
    "ghz_state",
    "w_state",
    "apply_local_unitary",
    "inner_product",
    "fidelity",
    "pauli",
    "BELL_KINDS",
]

#: absolute tolerance for normalization and unitarity checks
ATOL = 1e-9

#: soft cap on dense amplitude storage
MAX_ENTRIES = 2**24

BELL_KINDS = ("phi+", "psi+", "phi-", "psi-")


class ValidationError(ValueError):
    """Raised when inputs violate a documented precondition."""


class NumericError(ArithmeticError):
    """Raised when a computation fails numerically (non-finite data, no
    usable result at working precision)."""


def _as_complex_array(values, what: str) -> np.ndarray:
    arr = np.asarray(values, dtype=np.complex128)
    if not np.all(np.isfinite(arr.view(np.float64))):
        raise ValidationError(f"{what} contains non-finite entries")
    return arr


@dataclass(frozen=True)
class StateVector:
    """Normalized pure state of one or more parties.

    Parameters
    ----------
    dims : tuple of int
        Local dimension of each party, every entry at least 2.
    amplitudes : numpy.ndarray
        Complex amplitudes of length ``prod(dims)`` in row-major
        multi-index order.  Stored read-only.

    Notes
    -----
    Use :func:`make_state` or the named constructors instead of calling
    this class directly; they validate, normalize and freeze the array.
    """

    dims: tuple[int, ...]
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        dims = tuple(int(d) for d in self.dims)
        if len(dims) < 1 or any(d < 2 for d in dims):
            raise ValidationError(f"every local dimension must be >= 2, got {dims}")
        size = math.prod(dims)
        if size > MAX_ENTRIES:
            raise ValidationError(
                f"state size {size} exceeds the dense storage cap {MAX_ENTRIES}"
            )
        amps = _as_complex_array(self.amplitudes, "amplitudes").reshape(-1)
        if amps.size != size:
            raise ValidationError(
                f"amplitude count {amps.size} does not match prod(dims) = {size}"
            )
        amps = amps.copy()
        amps.setflags(write=False)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def n_parties(self) -> int:
        return len(self.dims)

    def tensor(self) -> np.ndarray:
        """Amplitudes reshaped to one axis per party."""
        return self.amplitudes.reshape(self.dims)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def amplitude(self, index: tuple[int, ...]) -> complex:
        """Amplitude at a multi-index."""
        if len(index) != len(self.dims):
            raise ValidationError(f"index {index} has wrong arity for dims {self.dims}")
        return complex(self.tensor()[tuple(index)])


@dataclass(frozen=True)
class LocalUnitary:
    """One unitary factor per party, applied as U_1 x U_2 x ... x U_N.

    Each factor k must be square, of size ``dims[k]``, and satisfy
    U U^dagger = I entrywise within 1e-9.
    """

    factors: tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        checked = []
        for k, f in enumerate(self.factors):
            m = _as_complex_array(f, f"factor {k}")
            if m.ndim != 2 or m.shape[0] != m.shape[1]:
                raise ValidationError(f"factor {k} is not square: shape {m.shape}")
            resid = np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0])))
            if resid > ATOL:
                raise ValidationError(
                    f"factor {k} is not unitary: max |U*U - I| = {resid:.3e}"
                )
            m = m.copy()
            m.setflags(write=False)
            checked.append(m)
        object.__setattr__(self, "factors", tuple(checked))

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(f.shape[0] for f in self.factors)


def make_state_raw(dims, entries) -> tuple[np.ndarray, float]:
    """Assemble an unnormalized amplitude array from sparse entries.

    Returns the dense array together with its Euclidean norm.  Most
    callers want :func:`make_state`, which normalizes.
    """
    dims = tuple(int(d) for d in dims)
    if any(d < 2 for d in dims):
        raise ValidationError(f"every local dimension must be >= 2, got {dims}")
    arr = np.zeros(dims, dtype=np.complex128)
    items = entries.items() if hasattr(entries, "items") else entries
    count = 0
    for index, value in items:
        index = tuple(int(i) for i in index)
        if len(index) != len(dims) or any(
            not 0 <= i < d for i, d in zip(index, dims)
        ):
            raise ValidationError(f"index {index} out of range for dims {dims}")
        value = complex(value)
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise ValidationError(f"non-finite amplitude at index {index}")
        arr[index] = value
        count += 1
    if count == 0:
        raise ValidationError("no amplitude entries given")
    norm = float(np.linalg.norm(arr))
    if norm == 0.0:
        raise ValidationError("all amplitudes are zero")
    return arr.reshape(-1), norm


def make_state(dims, entries) -> StateVector:
    """Build a normalized state from sparse ``(multi-index, amplitude)`` data.

    Parameters
    ----------
    dims : sequence of int
        Local dimensions, each at least 2.
    entries : mapping or iterable of pairs
        Multi-index to complex amplitude; omitted indices are zero.

    Returns
    -------
    StateVector
        The normalized state.

    Examples
    --------
    >>> make_state([2, 2], {(0, 0): 1, (1, 1): 1}).amplitude((0, 0))
    (0.7071067811865475+0j)
    """
    arr, norm = make_state_raw(dims, entries)
    return StateVector(tuple(int(d) for d in dims), arr / norm)


def bell_state(which: str) -> StateVector:
    """One of the four Bell states of two qubits.

    Parameters
    ----------
    which : {"phi+", "psi+", "phi-", "psi-"}
        phi+/- have support on 00 and 11, psi+/- on 01 and 10; the
        sign applies to the second term.
    """
    which = which.lower()
    r = 1.0 / math.sqrt(2.0)
    table = {
        "phi+": {(0, 0): r, (1, 1): r},
        "phi-": {(0, 0): r, (1, 1): -r},
        "psi+": {(0, 1): r, (1, 0): r},
        "psi-": {(0, 1): r, (1, 0): -r},
    }
    if which not in table:
        raise ValidationError(f"unknown Bell state {which!r}; expected one of {BELL_KINDS}")
    return make_state((2, 2), table[which])


def ghz_state(n_parties: int) -> StateVector:
    """(|0...0> + |1...1>)/sqrt(2) on ``n_parties`` qubits (n >= 2)."""
    n = int(n_parties)
    if n < 2:
        raise ValidationError(f"ghz_state needs at least 2 parties, got {n}")
    return make_state((2,) * n, {(0,) * n: 1.0, (1,) * n: 1.0})


def w_state() -> StateVector:
    """The three-qubit W state (|001> + |010> + |100>)/sqrt(3)."""
    return make_state((2, 2, 2), {(0, 0, 1): 1.0, (0, 1, 0): 1.0, (1, 0, 0): 1.0})


def apply_local_unitary(state: StateVector, u: LocalUnitary) -> StateVector:
    """Apply U_1 x ... x U_N to a state, one factor per party.

    Parameters
    ----------
    state : StateVector
    u : LocalUnitary
        ``u.dims`` must equal ``state.dims``.

    Returns
    -------
    StateVector
        The transformed state; the norm is preserved by unitarity.
    """
    if u.dims != state.dims:
        raise ValidationError(
            f"factor dims {u.dims} do not match state dims {state.dims}"
        )
    t = state.tensor()
    n = state.n_parties
    for k, f in enumerate(u.factors):
        # contract factor k with axis k, then restore the axis position
        t = np.moveaxis(np.tensordot(f, t, axes=([1], [k])), 0, k)
    return StateVector(state.dims, t.reshape(-1))


def inner_product(a: StateVector, b: StateVector) -> complex:
    """<a|b> with conjugation on ``a``."""
    if a.dims != b.dims:
        raise ValidationError(f"dims differ: {a.dims} vs {b.dims}")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def fidelity(a: StateVector, b: StateVector) -> float:
    """|<a|b>|^2 for normalized states."""
    return abs(inner_product(a, b)) ** 2


def pauli(name: str) -> np.ndarray:
    """Single-qubit Pauli matrix by name ("I", "X", "Y" or "Z")."""
    table = {
        "I": np.eye(2, dtype=np.complex128),
        "X": np.array([[0, 1], [1, 0]], dtype=np.complex128),
        "Y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
        "Z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
    }
    try:
        return table[name.upper()].copy()
    except KeyError:
        raise ValidationError(f"unknown Pauli {name!r}") from None
