import pathlib

import pytest

import framekit as fk

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "fixtures"


def read(name: str) -> str:
    return (FIXTURES / name).read_text()


def test_fixture_square_roundtrip():
    text = read("fig1.room")
    square = fk.read_room(text)
    assert square.side == 7
    assert fk.verify_room_square(square) == []
    assert fk.write_room(square) == text


def test_broken_fixture_reports_violations():
    square = fk.read_room(read("fig1-broken.room"))
    violations = fk.verify_room_square(square)
    assert violations and all("kind" in v for v in violations)


def test_standardization_chain():
    square = fk.read_room(read("fig1.room"))
    frame = fk.square_to_frame(square, square.square_symbol)
    assert fk.verify_room_frame(frame) == []
    back = fk.frame_to_square(frame, square.square_symbol)
    assert fk.verify_room_square(back) == []


def test_starter_development():
    frame = fk.develop_starter(read("z10-pair.starter"))
    assert fk.verify_room_frame(frame) == []
    assert [len(h) for h in frame.partition] == [2] * 5
    assert fk.starter_is_skew(read("z10-pair.starter"))


def test_intransitive_development_matches_figure():
    frame = fk.develop_starter(read("intransitive-2x6.starter"))
    fig3 = fk.read_room(read("fig3.room"))
    assert fk.cells_identical(frame, fig3)


def test_search_and_double():
    square = fk.find_room_square(7, seed=11)
    assert fk.verify_room_square(square) == []
    if fk.is_skew(square):
        frame = fk.double_square(square)
        assert fk.verify_room_frame(frame) == []
        assert [len(h) for h in frame.partition] == [2] * 7


def test_nonexistent_sides_raise():
    with pytest.raises(ValueError):
        fk.find_room_square(4)
    with pytest.raises(ValueError):
        fk.find_room_square(5)


def test_search_starter_z10():
    text = fk.search_starter([10], hole=["0", "5"], skew=True, seed=2)
    assert text is not None
    assert fk.starter_is_skew(text)
    frame = fk.develop_starter(text)
    assert fk.verify_room_frame(frame) == []


def test_kirkman_chain():
    kts = fk.read_bd(read("cayley-kts15.bd"))
    assert kts.fully_resolvable()
    frame = fk.kts_to_frame(kts, "a")
    assert fk.verify_k_frame(frame, 3, 1) == []
    fixture = fk.read_bd(read("cayley-frame27.bd"))
    assert fk.verify_k_frame(fixture, 3, 1) == []
    back = fk.frame_to_kts(frame, "a")
    assert fk.verify_k_frame(back, 3, 1) == []


def test_gdd_weighting():
    template = fk.kts_to_frame(fk.kts9(), "0")
    frame = fk.gdd_weight_construction(fk.bibd_13_4(), 2, {4: template})
    assert len(frame.holes) == 13
    assert fk.verify_k_frame(frame, 3, 1) == []


def test_iols_route():
    frame = fk.kirkman_4_4_from_iols(read("euler-iols6.latin"))
    assert [len(h) for h in frame.holes] == [4, 4, 4, 4]
    assert fk.verify_k_frame(frame, 3, 1) == []
