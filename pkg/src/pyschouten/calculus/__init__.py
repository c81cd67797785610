from .euler import EulerResult, euler, euler_all, highest_order, odd_degree
from .total import iterated_total_derivative, total_derivative
