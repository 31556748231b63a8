"""Experiment pipelines: file formats, noise models, datasets and clustering."""
