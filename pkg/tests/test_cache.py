import pytest

from jacklr import jack
from jacklr.cache import CorruptRecord, DiskStore, decode_record, encode_record
from jacklr.jack import MemoryStore, jack_expand


def _full(lam):
    return dict(jack_expand(lam).coeffs)


def test_record_round_trip():
    for lam in [(1,), (2, 1), (3, 1), (2, 2, 1)]:
        n = sum(lam)
        coeffs = _full(lam)
        assert decode_record(encode_record(lam, n, coeffs), lam, n) == coeffs


@pytest.mark.parametrize("damage", [
    lambda t: t[:-1],
    lambda t: t[: t.rfind("end")],
    lambda t: t.replace("v1", "v9"),
    lambda t: t.replace("|4|", "|5|", 1),
    lambda t: "\n".join(t.split("\n")[:2] + t.split("\n")[3:]),
])
def test_damaged_records_are_rejected(damage):
    lam = (3, 1)
    text = encode_record(lam, 4, _full(lam))
    with pytest.raises(Exception) as exc:
        decode_record(damage(text), lam, 4)
    assert isinstance(exc.value, (CorruptRecord, ValueError))


def test_disk_store_hit_miss_and_recompute(tmp_path, isolated_store):
    store = DiskStore(tmp_path)
    jack.set_store(store)
    cold = jack_expand((3, 1), 4).coeffs
    assert store.misses > 0 and store.hits == 0
    path = store.path_for(((3, 1), 4))
    original = path.read_bytes()

    warm_store = DiskStore(tmp_path)
    jack.set_store(warm_store)
    assert jack_expand((3, 1), 4).coeffs == cold
    assert warm_store.misses == 0 and warm_store.hits > 0

    path.write_bytes(original[: len(original) // 2])
    fixed_store = DiskStore(tmp_path)
    jack.set_store(fixed_store)
    assert jack_expand((3, 1), 4).coeffs == cold
    assert fixed_store.misses == 1
    assert path.read_bytes() == original


def test_cache_is_transparent(tmp_path, isolated_store):
    jack.set_store(MemoryStore())
    plain = {lam: jack_expand(lam).coeffs for lam in [(4,), (2, 2), (2, 1, 1)]}
    jack.set_store(DiskStore(tmp_path))
    assert {lam: jack_expand(lam).coeffs for lam in plain} == plain
    assert not list(tmp_path.glob(".tmp_*"))
