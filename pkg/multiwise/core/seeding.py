__all__ = ["generate_id", "derive_seed"]

import random
import uuid


def generate_id() -> str:
    return str(uuid.uuid1())


def derive_seed(root_seed: int, *keys: object) -> int:
    """Derive a deterministic 32-bit sub-seed from a root seed.

    The derived seed only depends on `root_seed` and `keys`, so that each
    group, experiment or repetition gets its own reproducible random stream,
    independently of execution order or worker process.

    Parameters
    ----------
    root_seed : int
        The seed everything is derived from
    *keys
        Identifiers of the sub-stream (group index, repetition index...)

    Returns
    -------
    int
        Seed in [0, 2**32)
    """
    reference = ":".join(str(k) for k in (root_seed, *keys))
    rng = random.Random(reference)
    return rng.getrandbits(32)
