import json
import math

import pytest

from minuteforge.affinity import ClusterSolution
from minuteforge.meaningfulness import MeaningfulnessScore
from minuteforge.minutes import Minutes, rank_clusters, render, select_minutes
from minuteforge.phrases import SyntacticPhrase


def solution(exemplars, assignment):
    return ClusterSolution(
        exemplars=exemplars, assignment=assignment,
        iterations_run=10, converged=True, net_similarity=0.0,
    )


def scores(values):
    return [MeaningfulnessScore(i, v, 1) for i, v in enumerate(values)]


def phrases(n):
    return [SyntacticPhrase(i, 0, [f"tok{i}", "a", "b"], [f"tok{i}", "a", "b"])
            for i in range(n)]


class TestRankClusters:
    def test_mean_and_tiebreak(self):
        # cluster A: members 0,1 with scores 1.0, 3.0 (mean 2.0)
        # cluster B: member 2 with score 2.0 (mean 2.0) -> tie, earlier exemplar first
        sol = solution([0, 2], [0, 0, 2])
        ranked = rank_clusters(sol, scores([1.0, 3.0, 2.0]))
        assert [c.exemplar_phrase_id for c in ranked] == [0, 2]
        assert ranked[0].meaningfulness == pytest.approx(2.0)
        assert ranked[1].meaningfulness == pytest.approx(2.0)

    def test_single_cluster_mean_of_all(self):
        sol = solution([1], [1, 1, 1])
        ranked = rank_clusters(sol, scores([1.0, 2.0, 6.0]))
        assert len(ranked) == 1
        assert ranked[0].meaningfulness == pytest.approx(3.0)

    def test_meaningfulness_fixture_ordering(self):
        sol = solution([0, 1], [0, 1])
        ranked = rank_clusters(sol, scores([1.2877, 1.6931]))
        assert [c.exemplar_phrase_id for c in ranked] == [1, 0]

    def test_exemplar_in_members(self):
        sol = solution([0, 2], [0, 0, 2, 2])
        for c in rank_clusters(sol, scores([1, 2, 3, 4])):
            assert c.exemplar_phrase_id in c.member_phrase_ids


class TestSelectMinutes:
    def test_minimum_one_line(self):
        sol = solution([0], [0, 0, 0])
        ranked = rank_clusters(sol, scores([1, 2, 3]))
        m = select_minutes(ranked, 0.10, phrases(3))
        assert len(m.lines) == 1

    def test_ceiling_rule_and_chronology(self):
        # 20 singleton clusters, distinct scores; top-2 selected, output in
        # phrase order even though rank order differs
        n = 20
        sol = solution(list(range(n)), list(range(n)))
        vals = [float(i) for i in range(n)]
        vals[3] = 100.0  # rank 1 occurs early in the document
        ranked = rank_clusters(sol, scores(vals))
        m = select_minutes(ranked, 0.10, phrases(n))
        assert len(m.lines) == math.ceil(0.10 * n)
        assert [l.phrase_id for l in m.lines] == [3, 19]

    def test_full_selection(self):
        n = 7
        sol = solution(list(range(n)), list(range(n)))
        ranked = rank_clusters(sol, scores([float(i) for i in range(n)]))
        m = select_minutes(ranked, 1.0, phrases(n))
        assert [l.phrase_id for l in m.lines] == list(range(n))

    @pytest.mark.parametrize("ratio", [0.0, -0.1, 1.5])
    def test_ratio_validation(self, ratio):
        sol = solution([0], [0])
        ranked = rank_clusters(sol, scores([1.0]))
        with pytest.raises(ValueError):
            select_minutes(ranked, ratio, phrases(1))

    def test_prefix_monotone_in_ratio(self):
        n = 10
        sol = solution(list(range(n)), list(range(n)))
        ranked = rank_clusters(sol, scores([float(i * i % 7) for i in range(n)]))
        selected = set()
        for ratio in (0.1, 0.3, 0.5, 0.8, 1.0):
            ids = {l.phrase_id for l in select_minutes(ranked, ratio, phrases(n)).lines}
            assert selected <= ids
            selected = ids

    def test_earliest_member_ordering(self):
        # cluster exemplar 5 contains early member 0; earliest-member mode
        # sorts it before the exemplar-2 cluster
        sol = solution([2, 5], [5, 2, 2, 5, 5, 5])
        ranked = rank_clusters(sol, scores([1.0] * 6))
        m = select_minutes(ranked, 1.0, phrases(6), ordering="earliest-member")
        assert [l.phrase_id for l in m.lines] == [5, 2]
        m2 = select_minutes(ranked, 1.0, phrases(6), ordering="exemplar")
        assert [l.phrase_id for l in m2.lines] == [2, 5]


class TestRender:
    def test_text_format(self):
        m = Minutes("m", [], 0.1)
        sol = solution([0, 1], [0, 1])
        ranked = rank_clusters(sol, scores([2.0, 1.0]))
        m = select_minutes(ranked, 1.0, phrases(2))
        text = render(m, "text")
        assert text == "tok0 a b\ntok1 a b\n"

    def test_json_format(self):
        sol = solution([0], [0])
        ranked = rank_clusters(sol, scores([2.0]))
        m = select_minutes(ranked, 1.0, phrases(1))
        payload = json.loads(render(m, "json"))
        assert payload == [{
            "phrase_id": 0, "text": "tok0 a b",
            "meaningfulness": 2.0, "cluster_size": 1,
        }]

    def test_unknown_format(self):
        sol = solution([0], [0])
        m = select_minutes(rank_clusters(sol, scores([1.0])), 1.0, phrases(1))
        with pytest.raises(ValueError):
            render(m, "xml")
