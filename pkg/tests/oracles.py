"""Independent reference computations used only by the tests."""
from collections import Counter


def peeling_fixed_point(slots_by_vehicle):
    """Set of decodable vehicles: keep removing any vehicle that is alone in some slot.

    Occupancy is recounted from scratch every round; nothing is shared with
    the decoder under test.
    """
    remaining = dict(slots_by_vehicle)
    decoded = set()
    changed = True
    while changed:
        changed = False
        counts = Counter(s for slots in remaining.values() for s in slots)
        for v, slots in list(remaining.items()):
            if any(counts[s] == 1 for s in slots):
                decoded.add(v)
                del remaining[v]
                changed = True
                break
    return decoded
