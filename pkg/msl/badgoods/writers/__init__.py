"""
Writers for the tables that are created by MSL-BadGoods.
"""
from .csv_ import CSVWriter
from .json_ import JSONWriter
