import ast

from msl.badgoods import constants


def test_every_constant_is_documented():
    with open(constants.__file__) as fp:
        body = ast.parse(fp.read()).body

    names = []
    for index, node in enumerate(body):
        if not isinstance(node, ast.Assign):
            continue
        names.append(node.targets[0].id)
        following = body[index + 1] if index + 1 < len(body) else None
        assert isinstance(following, ast.Expr), node.targets[0].id
        assert isinstance(following.value, ast.Constant), node.targets[0].id
        assert following.value.value.startswith(':class:'), node.targets[0].id

    for name in ('P_MAX', 'D_MAX', 'Q_MAX', 'SEASONAL_PERIOD',
                 'MAX_DEMAND_REDUCTION', 'MAX_CAPACITY_INCREASE'):
        assert name in names


def test_order_bounds():
    assert (constants.P_MAX, constants.D_MAX, constants.Q_MAX) == (3, 2, 3)
    assert constants.SEASONAL_PERIOD == 12
    assert 0 < constants.MAX_DEMAND_REDUCTION < 1
    assert 0 < constants.MAX_CAPACITY_INCREASE < 1
