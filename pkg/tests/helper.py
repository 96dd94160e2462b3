"""
Helper functions for the tests
"""
import os

import numpy as np

from msl.badgoods.dataset import Dataset
from msl.badgoods.domain import MonthlyRecord
from msl.badgoods.domain import PlanRow
from msl.badgoods.domain import RatePercent
from msl.badgoods.utils import month_range

# (month, demand, rate %, capacity, freshness, shelf life) of the 2025 Beer-G plan
BEER_G_PLAN = [
    ('2025-01', 500, '18.77', 527, 2, 4),
    ('2025-02', 600, '19.76', 595, 1, 4),
    ('2025-03', 700, '20.02', 527, 3, 4),
    ('2025-04', 800, '20.09', 595, 0, 4),
    ('2025-05', 900, '20.11', 527, 4, 4),
    ('2025-06', 1000, '20.12', 595, 2, 4),
    ('2025-07', 1200, '20.12', 527, 1, 4),
    ('2025-08', 1300, '20.12', 595, 3, 4),
    ('2025-09', 1400, '20.12', 527, 0, 4),
    ('2025-10', 1450, '20.12', 595, 4, 4),
    ('2025-11', 1500, '20.12', 527, 2, 4),
    ('2025-12', 1500, '20.12', 595, 1, 4),
]

# (expected returns, score rounded to 3 decimals, level) of each month of BEER_G_PLAN
BEER_G_EXPECTED = [
    (94, 0.422, 'Medium'),
    (119, 0.669, 'Medium'),
    (140, 0.370, 'Low'),
    (161, 1.000, 'High'),
    (181, 0.343, 'Low'),
    (201, 0.581, 'Medium'),
    (241, 0.822, 'High'),
    (262, 0.541, 'Medium'),
    (282, 1.000, 'High'),
    (292, 0.491, 'Medium'),
    (302, 0.757, 'Medium'),
    (302, 0.844, 'High'),
]


def sample_path(filename):
    """Return the path to a file in the 'samples' directory."""
    return os.path.join(os.path.dirname(__file__), 'samples', filename)


def beer_g_plan_rows():
    """Return the 2025 Beer-G plan as a list of PlanRow objects."""
    return [PlanRow(m, d, RatePercent.from_percent(r), c, f, s) for m, d, r, c, f, s in BEER_G_PLAN]


def make_dataset(bought, returns, capacity, freshness=2, shelf_life=4, start='2022-01', product_label='test'):
    """Create a Dataset of consecutive months.

    A scalar `capacity`, `freshness` or `shelf_life` is used for every month.
    """
    n = len(bought)
    capacity = np.broadcast_to(capacity, (n,))
    freshness = np.broadcast_to(freshness, (n,))
    shelf_life = np.broadcast_to(shelf_life, (n,))
    months = month_range(start, n)
    records = [MonthlyRecord(months[i], bought[i], returns[i], capacity[i], freshness[i], shelf_life[i])
               for i in range(n)]
    return Dataset(records, product_label=product_label)
