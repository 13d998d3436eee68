"""module."""

from polyop.src.families.subset import Subset
from polyop.src.operads.presentations import (
    COMTRIAS_GENERATORS,
    PresentationReport,
    RelationCheck,
    _empty_check,
    _evaluate,
    _power,
    comtrias_relations_check,
    empty_relations_check,
)

PASSING = RelationCheck("a", 2, holds=True, detail="")
FAILING = RelationCheck("b", 1, holds=False, detail="x")


class TestRelationCheck:
    """Test class."""

    def test_fields(self) -> None:
        """Test method."""
        check = RelationCheck("x", 2, holds=True, detail="d")
        assert check.equalities == 2
        assert check.holds


class TestPresentationReport:
    """Test class."""

    def test_total_equalities(self) -> None:
        """Test method."""
        assert PresentationReport("demo", (PASSING, FAILING)).total_equalities == 3

    def test_holding_equalities(self) -> None:
        """Test method."""
        assert PresentationReport("demo", (PASSING, FAILING)).holding_equalities == 2

    def test_all_hold(self) -> None:
        """Test method."""
        assert not PresentationReport("demo", (FAILING,)).all_hold()
        assert PresentationReport("demo", ()).all_hold()

    def test_format_summary(self) -> None:
        """Test method."""
        report = PresentationReport("demo", (FAILING,))
        assert report.format_summary() == "b: FAIL (x)\ndemo: 0/1 hold"


def test__evaluate() -> None:
    """Test function."""
    assert _evaluate(("a", 1, "a")) == Subset(3, 0b001)
    assert _evaluate(("c", 2, "c")) == Subset(3, 0b111)


def test_comtrias_relations_check() -> None:
    """Test function."""
    report = comtrias_relations_check()
    assert report.all_hold()
    assert report.total_equalities == 11
    assert report.holding_equalities == 11
    assert report.checks[-1].label == "(12)"
    assert report.format_summary().endswith("comtrias: 11/11 hold")
    assert set(COMTRIAS_GENERATORS) == {"a", "b", "c"}


def test__power() -> None:
    """Test function."""
    assert _power(Subset(2, 0b11), 1, Subset(0)) == Subset(1)
    assert _power(Subset(2, 0b11), 1, Subset(1, 1)) == Subset(2, 0b11)


def test_empty_relations_check() -> None:
    """Test function."""
    report = empty_relations_check()
    assert report.all_hold()
    assert report.total_equalities == 4
    assert report.name == "power-perm"


def test__empty_check() -> None:
    """Test function."""
    assert _empty_check("r", None).holds
    failed = _empty_check("r", "I={1}")
    assert not failed.holds
    assert failed.detail == "I={1}"
