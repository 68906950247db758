import partlayers as pl


def test_partition_basics():
    p = pl.Partition([1, 2, 4])
    assert p.parts == [4, 2, 1]
    assert str(p) == "(4,2,1)"
    assert pl.Partition.parse("(4,2,1)") == p
    assert pl.conjugate(p) == pl.Partition([3, 2, 1, 1])
    assert len(pl.enumerate_partitions(7)) == 15


def test_capacities():
    rec = pl.capacity_record([4, 2, 1])
    assert (rec.s, rec.t, rec.dim_loc) == (3, 2, 3)
    assert pl.local_dim([1]) == 0
    assert pl.local_dim([3, 1]) == 2


def test_graph_and_oracle():
    g = pl.build_graph(4)
    assert len(g.vertices) == 5
    assert pl.are_adjacent([4], [3, 1])
    assert pl.omega_loc_bruteforce([4, 2, 1], pl.build_graph(7)) == 4
    report = pl.verify_dimension_formula(8)
    assert report.checked == 22
    assert report.verified
    assert report.mismatches == []


def test_profile_and_boundaries():
    prof = pl.profile(7)
    assert prof.counts == {1: 2, 2: 9, 3: 4}
    assert prof.is_interval
    table = pl.boundary_table(4)
    assert table.max_jump == 1
    assert pl.max_edge_jump(1) == 0


def test_first_occurrence():
    recs = pl.first_occurrence_scan(4, 11)
    assert [r.n_first for r in recs] == [1, 2, 4, 7, 11]
    assert all(r.staircase_match for r in recs)
    assert pl.representatives_up_to_conjugation(recs[3].members) == [
        pl.Partition([4, 2, 1]),
        pl.Partition([3, 3, 1]),
    ]


def test_restriction():
    assert "self-conjugate-axis" in pl.builtin_regions()
    assert pl.restricted_layer_counts(4, "self-conjugate-axis") == {2: 1}
