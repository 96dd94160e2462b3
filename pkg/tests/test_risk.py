import json
import os
from io import StringIO

import numpy as np
import pytest

from helper import BEER_G_EXPECTED
from helper import beer_g_plan_rows
from helper import make_dataset
from helper import sample_path
from msl.badgoods import score_files
from msl.badgoods.domain import PlanRow
from msl.badgoods.domain import RatePercent
from msl.badgoods.domain import RiskLevel
from msl.badgoods.errors import AlreadyLow
from msl.badgoods.errors import BadCell
from msl.badgoods.errors import EmptyInput
from msl.badgoods.errors import HorizonMismatch
from msl.badgoods.errors import InvalidRange
from msl.badgoods.errors import InvariantViolation
from msl.badgoods.errors import IoError
from msl.badgoods.ingest import PlanInput
from msl.badgoods.ingest import parse_csv
from msl.badgoods.ingest import parse_plan_csv
from msl.badgoods.risk import Action
from msl.badgoods.risk import ActionBounds
from msl.badgoods.risk import ActionKind
from msl.badgoods.risk import ScoringConfig
from msl.badgoods.risk import Source
from msl.badgoods.risk import build_plan
from msl.badgoods.risk import emit_recommendations
from msl.badgoods.risk import emit_risk_table
from msl.badgoods.risk import forecast_fields
from msl.badgoods.risk import format_ratio
from msl.badgoods.risk import read_risk_table
from msl.badgoods.risk import recommend
from msl.badgoods.risk import recommend_all
from msl.badgoods.risk import score_plan
from msl.badgoods.risk import score_row
from msl.badgoods.risk import summarize
from msl.badgoods.utils import to_month
from msl.examples.badgoods import example_path


def _history():
    return parse_csv(example_path('beer_g_history.csv'))


def test_score_beer_g_plan():
    rows = score_plan(beer_g_plan_rows())
    assert len(rows) == 12
    for row, (expected, score, level) in zip(rows, BEER_G_EXPECTED):
        assert row.expected_return_qty == expected
        assert abs(row.risk_score - score) <= 0.002
        assert row.risk_level.value == level
    levels = [r.risk_level.value[0] for r in rows]
    assert ''.join(levels) == 'MMLHLMHMHMMH'


def test_score_plan_sorts_by_month():
    rows = beer_g_plan_rows()
    scored = score_plan(reversed(rows))
    assert [str(r.month) for r in scored] == [str(r.month) for r in rows]


def test_score_row_thresholds():
    row = PlanRow('2025-01', 500, 0.1877, 527, 2, 4)
    assert score_row(row).risk_level is RiskLevel.MEDIUM
    assert score_row(row, low_upper=0.5, high_lower=0.9).risk_level is RiskLevel.LOW
    assert score_row(row, low_upper=0.2, high_lower=0.42).risk_level is RiskLevel.HIGH


def test_scoring_config():
    config = ScoringConfig()
    assert config.horizon == 12
    assert config.rate_source is Source.FORECAST
    assert config.capacity_source is Source.FORECAST
    assert (config.low_upper, config.high_lower) == (0.4, 0.8)
    assert tuple(config.bounds) == (3, 2, 3)
    assert ScoringConfig(rate_source='plan').rate_source is Source.PLAN_OVERRIDE
    assert tuple(ScoringConfig(bounds=(1, 1, 1)).bounds) == (1, 1, 1)
    with pytest.raises(InvalidRange):
        ScoringConfig(horizon=0)
    with pytest.raises(InvalidRange):
        ScoringConfig(low_upper=0.8, high_lower=0.4)
    with pytest.raises(InvalidRange):
        ScoringConfig(high_lower=1.1)
    with pytest.raises(ValueError):
        ScoringConfig(rate_source='guess')


def test_recommend_january():
    jan = score_plan(beer_g_plan_rows())[0]
    rec = recommend(jan)
    assert rec.current_level is RiskLevel.MEDIUM
    assert rec.target_level is RiskLevel.LOW
    assert rec.actions == (Action(ActionKind.INCREASE_FRESHNESS, 3),)
    assert rec.feasible
    assert abs(rec.resulting_score - 0.2745) <= 0.001
    assert rec.resulting_level is RiskLevel.LOW
    assert rec.describe() == 'IncreaseFreshness to 3 (score 0.274, Low)'


def test_recommend_april():
    apr = score_plan(beer_g_plan_rows())[3]
    rec = recommend(apr)
    assert rec.current_level is RiskLevel.HIGH
    assert rec.target_level is RiskLevel.MEDIUM
    assert rec.actions == (Action(ActionKind.INCREASE_FRESHNESS, 1),)
    assert abs(rec.resulting_score - 0.7212) <= 0.001
    assert rec.resulting_level is RiskLevel.MEDIUM


def test_recommend_every_month():
    rows = score_plan(beer_g_plan_rows())
    recommendations = recommend_all(rows)
    assert len(recommendations) == 10
    assert [str(r.month) for r in recommendations] == [
        str(r.month) for r in rows if r.risk_level is not RiskLevel.LOW]
    for rec in recommendations:
        if rec.feasible:
            assert rec.resulting_level <= rec.target_level


def test_recommend_low_raises():
    mar = score_plan(beer_g_plan_rows())[2]
    assert mar.risk_level is RiskLevel.LOW
    with pytest.raises(AlreadyLow, match=r'2025-03'):
        recommend(mar)


def test_recommend_demand_when_freshness_disallowed():
    jan = score_plan(beer_g_plan_rows())[0]
    rec = recommend(jan, bounds=ActionBounds(allow_freshness=False))
    # (94 / 527) ** 0.5 = 0.422, reducing the demand to 450 gives 84 returns and 0.399
    assert rec.actions == (Action(ActionKind.REDUCE_DEMAND, 450),)
    assert rec.resulting_level is RiskLevel.LOW


def test_recommend_capacity():
    # 100 returns for a capacity of 240 scores 0.417, fresh goods cannot be fresher
    row = score_row(PlanRow('2025-01', 500, 0.2, 240, 4, 4))
    assert row.risk_level is RiskLevel.MEDIUM
    rec = recommend(row, bounds=ActionBounds(max_demand_reduction=0.0))
    assert rec.actions == (Action(ActionKind.INCREASE_CAPACITY, 290),)
    assert rec.resulting_score == pytest.approx(100 / 290)
    assert rec.resulting_level is RiskLevel.LOW


def test_recommend_pair():
    # no single change within 30% reaches Low, demand and capacity together do
    row = score_row(PlanRow('2025-01', 1000, 0.5, 1000, 4, 4))
    assert row.risk_score == 0.5
    bounds = ActionBounds(max_demand_reduction=0.15, max_capacity_increase=0.15)
    rec = recommend(row, bounds=bounds)
    assert [a.kind for a in rec.actions] == [ActionKind.REDUCE_DEMAND, ActionKind.INCREASE_CAPACITY]
    assert rec.resulting_level is RiskLevel.LOW
    demand, capacity = rec.actions[0].to, rec.actions[1].to
    assert demand >= 850
    assert capacity <= 1150
    assert round(demand * 0.5) / capacity < 0.4


def test_recommend_infeasible():
    row = score_row(PlanRow('2025-01', 1000, 1.0, 100, 0, 4))
    assert row.risk_score.capped or row.risk_score == 1.0
    bounds = ActionBounds(max_demand_reduction=0.1, max_capacity_increase=0.1, allow_freshness=False)
    rec = recommend(row, bounds=bounds)
    assert not rec.feasible
    assert rec.actions == ()
    assert rec.resulting_score == row.risk_score
    assert rec.resulting_level is RiskLevel.HIGH
    assert rec.describe() == 'no feasible action within bounds'


def test_action_bounds():
    bounds = ActionBounds()
    assert bounds == (0.3, 0.3, 50, True)
    with pytest.raises(InvalidRange):
        ActionBounds(max_demand_reduction=1.0)
    with pytest.raises(InvalidRange):
        ActionBounds(max_capacity_increase=-0.1)
    with pytest.raises(InvalidRange):
        ActionBounds(step=0)


def test_build_plan_all_overrides():
    inputs = parse_plan_csv(example_path('beer_g_plan_2025.csv'))
    rows = build_plan(None, inputs, ScoringConfig(horizon=12))
    assert rows == beer_g_plan_rows()
    assert rows == build_plan(_history(), inputs, ScoringConfig(rate_source='plan', capacity_source='plan'))


def test_build_plan_forecast():
    inputs = parse_plan_csv(sample_path('plan_partial_override.csv'))
    config = ScoringConfig(horizon=3, bounds=(1, 1, 1))
    rows = build_plan(_history(), inputs, config)
    assert [str(r.month) for r in rows] == ['2025-01', '2025-02', '2025-03']
    assert rows[0].return_rate == 0.1877
    assert rows[1].retailer_capacity == 595
    for r in rows:
        assert 0.15 <= r.return_rate <= 0.25
        assert round(r.return_rate * 10000) == pytest.approx(r.return_rate * 10000)
        assert 400 <= r.retailer_capacity <= 700
        assert isinstance(r.retailer_capacity, int)
    assert score_plan(rows)[0].expected_return_qty == 94


def test_build_plan_after_gap():
    inputs = [PlanInput(to_month('2025-03'), 500, 2, 4, None, 527)]
    rows = build_plan(_history(), inputs, ScoringConfig(horizon=1, bounds=(1, 1, 1)))
    assert str(rows[0].month) == '2025-03'


def test_build_plan_constant_history():
    history = make_dataset([100] * 12, [20] * 12, 300, start='2024-01')
    inputs = [PlanInput(to_month('2025-01'), 500, 2, 4, None, None),
              PlanInput(to_month('2025-02'), 600, 1, 4, None, None)]
    rows = build_plan(history, inputs, ScoringConfig(horizon=2))
    assert [(r.return_rate, r.retailer_capacity) for r in rows] == [(0.2, 300), (0.2, 300)]


def test_build_plan_errors():
    inputs = parse_plan_csv(example_path('beer_g_plan_2025.csv'))
    with pytest.raises(HorizonMismatch, match=r'12 months, expected a horizon of 6'):
        build_plan(None, inputs, ScoringConfig(horizon=6))
    with pytest.raises(HorizonMismatch, match=r'not consecutive'):
        build_plan(None, inputs[:5] + inputs[6:], ScoringConfig(horizon=11))

    partial = parse_plan_csv(sample_path('plan_partial_override.csv'))
    with pytest.raises(EmptyInput):
        build_plan(None, partial, ScoringConfig(horizon=3))
    with pytest.raises(InvariantViolation, match=r'return_rate_pct'):
        build_plan(_history(), partial, ScoringConfig(horizon=3, rate_source='plan'))
    with pytest.raises(InvariantViolation, match=r'retailer_capacity'):
        build_plan(_history(), partial, ScoringConfig(horizon=3, capacity_source='plan'))

    early = [PlanInput(to_month('2024-12'), 500, 2, 4, None, None)]
    with pytest.raises(HorizonMismatch, match=r'not after the history'):
        build_plan(_history(), early, ScoringConfig(horizon=1))


def test_forecast_fields():
    result = forecast_fields(_history(), fields=('retailer_capacity', 'shelf_life_in_months'),
                             bounds=(1, 1, 1), horizon=4)
    assert [f.field for f in result] == ['retailer_capacity', 'shelf_life_in_months']
    capacity, shelf_life = result
    assert capacity.fit is not None
    assert capacity.forecast.horizon == 4
    assert str(capacity.forecast.start_month) == '2025-01'
    assert capacity.forecast.has_intervals
    assert np.all(capacity.forecast.lower_95 <= capacity.forecast.point)
    assert shelf_life.fit is None
    assert shelf_life.forecast.point.tolist() == [4.0] * 4
    assert str(shelf_life.forecast.start_month) == '2025-01'


def test_format_ratio():
    assert format_ratio(0.5) == '0.5'
    assert format_ratio(0.25) == '0.25'
    assert format_ratio(1.0) == '1.0'
    assert format_ratio(0.0) == '0.0'
    assert format_ratio(2 / 3) == '0.667'


def test_emit_risk_table_csv():
    rows = score_plan(beer_g_plan_rows())
    lines = emit_risk_table(rows).splitlines()
    assert lines[0] == ('date,demand_plan_qty,return_rate_pct,expected_return_qty,retailer_capacity,'
                        'freshness_in_months,shelf_life_in_months,freshness_ratio,bg_risk_score,risk_level')
    assert len(lines) == 13
    assert lines[1] == '2025-01,500,18.77,94,527,2,4,0.5,0.422,Medium'
    assert lines[4] == '2025-04,800,20.09,161,595,0,4,0.0,1.000,High'
    assert lines[5] == '2025-05,900,20.11,181,527,4,4,1.0,0.343,Low'
    assert lines[12] == '2025-12,1500,20.12,302,595,1,4,0.25,0.844,High'
    for line, (expected, score, level) in zip(lines[1:], BEER_G_EXPECTED):
        cells = line.split(',')
        assert int(cells[3]) == expected
        assert abs(float(cells[8]) - score) <= 0.002
        assert cells[9] == level


def test_emit_risk_table_json_roundtrip(tmpdir):
    rows = score_plan(beer_g_plan_rows())
    text = emit_risk_table(rows, format='json')
    records = json.loads(text)
    assert len(records) == 12
    assert records[0]['return_rate_pct'] == '18.77'
    assert records[0]['return_rate'] == 0.1877
    assert records[3]['risk_score_capped'] is False
    assert records[3]['risk_level'] == 'High'

    path = os.path.join(str(tmpdir), 'risk_table.json')
    emit_risk_table(rows, format='JSON', file=path)
    assert read_risk_table(path) == rows
    with pytest.raises(IoError, match=r'File exists'):
        emit_risk_table(rows, format='json', file=path)


def test_emit_risk_table_errors():
    with pytest.raises(EmptyInput):
        emit_risk_table([])
    with pytest.raises(ValueError, match=r'Invalid format'):
        emit_risk_table(score_plan(beer_g_plan_rows()), format='xml')


def test_read_risk_table_errors():
    with pytest.raises(BadCell, match=r'invalid JSON'):
        read_risk_table(StringIO('[{'))
    with pytest.raises(BadCell, match=r'list of records'):
        read_risk_table(StringIO('{}'))
    with pytest.raises(BadCell, match=r"'risk_level'"):
        read_risk_table(StringIO('[{"date": "2025-01", "demand_plan_qty": 500, "return_rate": 0.1877, '
                                 '"retailer_capacity": 527, "freshness_in_months": 2, '
                                 '"shelf_life_in_months": 4, "bg_risk_score": 0.42, '
                                 '"expected_return_qty": 94}]'))


def test_emit_recommendations():
    rows = score_plan(beer_g_plan_rows())
    records = json.loads(emit_recommendations(recommend_all(rows)))
    assert len(records) == 10
    assert records[0] == {
        'date': '2025-01',
        'current_level': 'Medium',
        'target_level': 'Low',
        'feasible': True,
        'actions': [{'action': 'IncreaseFreshness', 'to': 3}],
        'resulting_score': pytest.approx(0.2745, abs=0.001),
        'resulting_level': 'Low',
    }


def test_summarize():
    rows = score_plan(beer_g_plan_rows())
    text = summarize(rows, recommend_all(rows), product_label='Organic Beer-G 1 Liter', notes=['seed: 1'])
    lines = text.splitlines()
    assert lines[0] == 'Bad-goods risk summary: Organic Beer-G 1 Liter'
    assert lines[1] == '12 months, 2025-01 to 2025-12: 4 High, 6 Medium, 2 Low'
    assert lines[3] == 'High risk months (immediate action):'
    assert lines[4] == '  2025-04  score 1.000'
    assert '  2025-03  0.370  Low     monitor' in lines
    assert lines[-1] == 'seed: 1'
    assert text.endswith('\n')
    with pytest.raises(EmptyInput):
        summarize([])


def test_score_files():
    rows = score_files(example_path('beer_g_plan_2025.csv'))
    assert rows == score_plan(beer_g_plan_rows())

    config = ScoringConfig(horizon=3, bounds=(1, 1, 1))
    rows = score_files(sample_path('plan_partial_override.csv'), history=example_path('beer_g_history.csv'),
                       config=config)
    assert [str(r.month) for r in rows] == ['2025-01', '2025-02', '2025-03']
    assert rows[0].return_rate == 0.1877
    assert rows[1].retailer_capacity == 595
    for row in rows:
        assert 0 <= row.return_rate <= 1
        assert row.retailer_capacity >= 1
        assert isinstance(row.risk_level, RiskLevel)

    with pytest.raises(EmptyInput):
        score_files(sample_path('plan_partial_override.csv'))


def test_raising_freshness_never_raises_level():
    rows = beer_g_plan_rows() + [
        PlanRow('2026-01', demand, RatePercent(0.2), 400, 0, 6) for demand in (50, 500, 1000, 1990)]
    checked = 0
    for row in rows:
        scored = score_row(row)
        if not 0 < scored.expected_return_qty < row.retailer_capacity:
            continue
        levels = [score_row(PlanRow(row.month, row.demand_plan_qty, row.return_rate, row.retailer_capacity,
                                    freshness, row.shelf_life_in_months)).risk_level
                  for freshness in range(row.freshness_in_months, row.shelf_life_in_months + 1)]
        assert all(a >= b for a, b in zip(levels, levels[1:]))
        checked += 1
    assert checked >= 12
