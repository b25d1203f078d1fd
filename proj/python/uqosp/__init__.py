"""Root-of-unity Fock modules of U_q[osp(1/2)], their R-matrices and Yang-Baxter checks."""

from ._uqosp import *  # noqa: F401,F403
from ._uqosp import UqospError, make_root, module, r_explicit, r_universal  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
