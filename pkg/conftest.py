import numpy as np
import pytest

from msl.examples.badgoods import example_path

# NumPy >= 2 reprs scalars as np.True_/np.float64(...); the doctests use the classic repr
if int(np.__version__.split('.')[0]) >= 2:
    np.set_printoptions(legacy='1.25')


@pytest.fixture(autouse=True)
def add_doctest_namespace(doctest_namespace):
    # the .rst files use these names without importing them
    doctest_namespace['np'] = np
    doctest_namespace['example_path'] = example_path
