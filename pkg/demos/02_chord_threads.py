# Chord classes along a path, and threading each class into one path.
#
# Number the vertices of H by their order along P.  An edge v_i v_j (i < j)
# lies in M-class i+j and N-class i+2j.  Two different edges never agree on
# both, so one path per nonempty class separates the edges from each other.
from seppaths.graph import Graph, path_edges
from seppaths.nested import ChordKind, build_chord_classes, index_along_path, thread_chords
from seppaths.verify import check_strong_separation

p = list(range(8))  # a Hamiltonian path 0-1-...-7
chords = [(0, 7), (1, 6), (2, 5), (0, 3), (1, 4), (3, 7), (2, 6)]
g = Graph(8, path_edges(p) + chords)
idx = index_along_path(p, range(8))

threads = []
for kind in ChordKind:
    print(f"{kind.value}-classes")
    for fam in build_chord_classes(chords, idx, kind):
        t = thread_chords(p, fam, idx)
        threads.append(t)
        print(f"  k={fam.k:2d} chords={list(fam.chords)} -> path {t}")

# The threads alone separate the chords from each other; violations that
# remain involve path edges, which the full construction handles separately.
leftover = [v for v in check_strong_separation(threads, g)
            if tuple(v.contained_edge) in {tuple(sorted(c)) for c in chords}
            and tuple(v.excluded_edge) in {tuple(sorted(c)) for c in chords}]
print("chord-vs-chord violations:", leftover)
