"""
Example files that are distributed with MSL-BadGoods.

* ``beer_g_plan_2025.csv``: a twelve-month demand plan of a 1-litre organic
  beer, with the return rate and the retailer capacity of every month
* ``beer_g_history.csv``: a synthetic 36-month history of the same product
"""
import os

_DIR = os.path.dirname(os.path.abspath(__file__))


def example_path(name):
    """Return the path to an example file.

    Parameters
    ----------
    name : :class:`str`
        The name of the file, e.g., ``'beer_g_plan_2025.csv'``.

    Returns
    -------
    :class:`str`
        The path.

    Raises
    ------
    FileNotFoundError
        If there is no example file with that name.
    """
    path = os.path.join(_DIR, name)
    if not os.path.isfile(path):
        raise FileNotFoundError('There is no example file named {!r}'.format(name))
    return path
