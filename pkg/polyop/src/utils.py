"""utils."""

import os
from collections.abc import Iterable, Iterator
from functools import cache

from polyop.src.consts import (
    AMBIENT_CAP_ENV_VAR,
    DECOMPOSE_BOUND_ENV_VAR,
    DEFAULT_AMBIENT_CAP,
    DEFAULT_DECOMPOSE_BOUND,
)
from polyop.src.errors import DomainError, ResourceBoundError


def read_positive_int_env(name: str, default: int) -> int:
    """Read a positive integer from the environment.

    Args:
        name: Name of the environment variable.
        default: Value used when the variable is unset or blank.

    Returns:
        The configured value.
    """
    raw = os.environ.get(name, "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError as err:
        msg = f"{name} must be a positive integer, got {raw!r}"
        raise DomainError(msg) from err
    if value < 1:
        msg = f"{name} must be a positive integer, got {value}"
        raise DomainError(msg)
    return value


@cache
def get_ambient_cap() -> int:
    """Get the largest ambient size a family may have.

    Returns:
        The cap from the environment, or the default.
    """
    return read_positive_int_env(AMBIENT_CAP_ENV_VAR, DEFAULT_AMBIENT_CAP)


@cache
def get_decompose_bound() -> int:
    """Get the largest ambient size the decomposition search accepts.

    Returns:
        The bound from the environment, or the default.
    """
    return read_positive_int_env(DECOMPOSE_BOUND_ENV_VAR, DEFAULT_DECOMPOSE_BOUND)


def check_ambient(ambient: int) -> None:
    """Validate an ambient size against the configured cap.

    Args:
        ambient: The size n of [n].
    """
    if ambient < 0:
        msg = f"ambient size must be nonnegative, got {ambient}"
        raise DomainError(msg)
    cap = get_ambient_cap()
    if ambient > cap:
        msg = f"ambient size {ambient} exceeds the configured cap {cap}"
        raise ResourceBoundError(msg)


def check_slot(slot: int, arity: int) -> None:
    """Validate a composition slot.

    Args:
        slot: The slot k.
        arity: The arity n of the element composed into.
    """
    if not 1 <= slot <= arity:
        msg = f"slot {slot} out of range 1..{arity}"
        raise DomainError(msg)


def full_mask(ambient: int) -> int:
    """Mask of [n]."""
    return (1 << ambient) - 1


def bit(position: int) -> int:
    """Mask of the singleton {position}."""
    return 1 << (position - 1)


def has_member(mask: int, position: int) -> bool:
    """Check whether position lies in the subset given by mask."""
    return bool(mask >> (position - 1) & 1)


def iter_members(mask: int) -> Iterator[int]:
    """Iterate over the positions of a mask in ascending order.

    Args:
        mask: Bitmask, bit i-1 standing for position i.

    Yields:
        The positions present in the mask.
    """
    position = 1
    while mask:
        if mask & 1:
            yield position
        mask >>= 1
        position += 1


def mask_from_members(members: Iterable[int]) -> int:
    """Build a mask from 1-based positions."""
    mask = 0
    for member in members:
        if member < 1:
            msg = f"positions are 1-based, got {member}"
            raise DomainError(msg)
        mask |= bit(member)
    return mask


def face_key(mask: int) -> tuple[int, int]:
    """Canonical order of subsets: cardinality, then mask value."""
    return mask.bit_count(), mask


def insert_block(mask: int, slot: int, block: int, block_size: int) -> int:
    """Replace position slot of mask by a block of block_size positions.

    Positions below slot stay, positions above slot move up by
    block_size - 1 and the block occupies slot..slot+block_size-1.

    Args:
        mask: Subset of [n].
        slot: The position k being replaced.
        block: Subset of [block_size] placed at the slot.
        block_size: The size m of the inserted block.

    Returns:
        The resulting subset of [n+m-1].
    """
    low = mask & ((1 << (slot - 1)) - 1)
    high = mask >> slot
    return low | (block << (slot - 1)) | (high << (slot - 1 + block_size))


def open_position(mask: int, slot: int) -> int:
    """Shift positions slot and above up by one, leaving slot empty."""
    low = mask & ((1 << (slot - 1)) - 1)
    return low | ((mask >> (slot - 1)) << slot)


def remove_block(mask: int, slot: int, block_size: int) -> int:
    """Drop the block slot..slot+block_size-1 and close the gap."""
    low = mask & ((1 << (slot - 1)) - 1)
    high = mask >> (slot - 1 + block_size)
    return low | (high << (slot - 1))


def extract_block(mask: int, slot: int, block_size: int) -> int:
    """Read the block slot..slot+block_size-1 as a subset of [block_size]."""
    return (mask >> (slot - 1)) & full_mask(block_size)
