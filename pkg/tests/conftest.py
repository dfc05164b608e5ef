from dfalg import scalars
from dfalg.dform import DoubleForm, transpose
from dfalg.fixtures import SplitMix64


def random_dform(n, p, q, seed, symmetric=False, field=scalars.RATIONAL):
    """Dense random (p, q) form with entries in [-3, 3], seeded."""
    rng = SplitMix64(seed)
    out = DoubleForm.zeros(n, p, q, field)
    rows, cols = out.mat.shape
    for i in range(rows):
        for j in range(cols):
            out.mat[i, j] = scalars.coerce(rng.next_entry(), field)
    if symmetric:
        out = out + transpose(out)
    return out
