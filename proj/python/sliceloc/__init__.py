"""Slice localisation agent: synthetic data, DQN training and greedy search."""

from ._sliceloc import (
    Agent,
    ConfigError,
    ContractError,
    NumericError,
    ParseError,
    extract_state,
    line_dataset,
    metrics,
    mip,
    read_dataset,
    step,
    synthesize,
    train,
    value_iteration,
    write_dataset,
)

UP, DOWN = 0, 1

__all__ = [
    "Agent",
    "ConfigError",
    "ContractError",
    "NumericError",
    "ParseError",
    "extract_state",
    "line_dataset",
    "metrics",
    "mip",
    "read_dataset",
    "step",
    "synthesize",
    "train",
    "value_iteration",
    "write_dataset",
    "UP",
    "DOWN",
]
