"""String and band modules over type C~ string algebras."""

from ._core import Algebra, delta, positive_roots

__all__ = ["Algebra", "delta", "positive_roots"]
