"""Permutations of [n] as tuples of images."""

from collections.abc import Iterator
from itertools import permutations

from polyop.src.errors import DomainError

type Permutation = tuple[int, ...]


def check_permutation(sigma: Permutation, size: int) -> None:
    """Validate that sigma is a bijection of [size].

    Args:
        sigma: sigma[i-1] is the image of i.
        size: The size n of [n].
    """
    if len(sigma) != size or sorted(sigma) != list(range(1, size + 1)):
        msg = f"{sigma} is not a permutation of [{size}]"
        raise DomainError(msg)


def identity_permutation(size: int) -> Permutation:
    """Get the identity of [size]."""
    return tuple(range(1, size + 1))


def invert_permutation(sigma: Permutation) -> Permutation:
    """Get the inverse permutation."""
    inverse = [0] * len(sigma)
    for position, image in enumerate(sigma, start=1):
        inverse[image - 1] = position
    return tuple(inverse)


def transposition(size: int, first: int, second: int) -> Permutation:
    """Get the permutation of [size] swapping two positions."""
    images = list(range(1, size + 1))
    images[first - 1], images[second - 1] = second, first
    return tuple(images)


def all_permutations(size: int) -> Iterator[Permutation]:
    """Iterate over the permutations of [size] in lexicographic order."""
    return permutations(range(1, size + 1))


def block_permutation(sigma: Permutation, slot: int, tau: Permutation) -> Permutation:
    """Get the block permutation induced by sigma and tau at a slot.

    If an element x of arity n is relabeled by sigma and y of arity m by tau,
    then composing the relabeled elements at sigma(slot) equals relabeling
    x composed with y at slot by this permutation of [n+m-1]. Outer positions
    follow sigma with the block collapsed and block positions follow tau
    shifted to start at sigma(slot).

    Args:
        sigma: Permutation of [n].
        slot: The slot k in [n].
        tau: Permutation of [m].

    Returns:
        The permutation of [n+m-1].
    """
    block_size = len(tau)
    target_slot = sigma[slot - 1]

    def expand(outer: int) -> int:
        return outer if outer < target_slot else outer + block_size - 1

    images: list[int] = []
    for position in range(1, len(sigma) + block_size):
        if position < slot:
            images.append(expand(sigma[position - 1]))
        elif position >= slot + block_size:
            images.append(expand(sigma[position - block_size]))
        else:
            images.append(target_slot + tau[position - slot] - 1)
    return tuple(images)
