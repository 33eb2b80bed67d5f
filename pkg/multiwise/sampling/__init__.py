__all__ = [
    "CoveringStrategy",
    "covering_strategy",
    "DEFAULT_GROUP_NAME",
    "FeatureGroup",
    "GroupSpec",
    "MultiWiseSampler",
    "multiwise_sample",
    "GroupOrder",
    "SamplingOptions",
    "GroupStats",
    "Sample",
    "SampleStats",
]

from multiwise.sampling.covering_strategy import CoveringStrategy, covering_strategy
from multiwise.sampling.group_spec import DEFAULT_GROUP_NAME, FeatureGroup, GroupSpec
from multiwise.sampling.multiwise import MultiWiseSampler, multiwise_sample
from multiwise.sampling.options import GroupOrder, SamplingOptions
from multiwise.sampling.sample import GroupStats, Sample, SampleStats
