"""Exact consensus rankings and the hardness gadgets around them."""
