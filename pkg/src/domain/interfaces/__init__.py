# Domain interfaces - protocols for monoids, semirings and target rings
from .algebra import CancellativeMonoidProtocol, CancellativeSemiringProtocol, TargetRingProtocol

__all__ = ["CancellativeMonoidProtocol", "CancellativeSemiringProtocol", "TargetRingProtocol"]
