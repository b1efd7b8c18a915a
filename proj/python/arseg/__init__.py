"""Projection-profile page segmentation: lines, words/sub-words, characters.

Thin wrapper over the native module. Images are numpy uint8 arrays of shape
(rows, cols); structured results are plain dicts mirroring the CLI's JSON.
"""

import json as _json

from ._core import (
    SegmentationError,
    __version__,
    horizontal_profile,
    load_image,
    otsu_threshold,
    render_overlay_gray,
    render_overlay_rgb,
    vertical_profile,
    write_image,
)
from . import _core


def default_config():
    """Default segmentation config as a dict."""
    return _json.loads(_core.default_config_json())


def segment_page(image, config=None, source=""):
    """Segment a page image; returns the segmentation tree as a dict."""
    config_json = _json.dumps(config) if config is not None else ""
    return _json.loads(_core.segment_page_json(image, config_json, source))


def render_overlay(image, tree, rgb=False):
    """Draw line, baseline and cut markers over a page."""
    tree_json = _json.dumps(tree)
    if rgb:
        return _core.render_overlay_rgb(image, tree_json)
    return _core.render_overlay_gray(image, tree_json)


def generate_page(spec=None, seed=0):
    """Synthetic page with ground truth: returns (image, truth dict)."""
    spec_json = _json.dumps(spec) if spec is not None else ""
    image, truth_json = _core.generate_page_json(spec_json, seed)
    return image, _json.loads(truth_json)


def exact_config(spec=None):
    """Config under which a synthetic layout is recovered exactly."""
    spec_json = _json.dumps(spec) if spec is not None else ""
    return _json.loads(_core.exact_config_json(spec_json))


def evaluate(tree, truth, tol=1):
    """Score a segmentation tree against ground truth; returns a dict."""
    return _json.loads(
        _core.evaluate_json(_json.dumps(tree), _json.dumps(truth), tol)
    )


__all__ = [
    "SegmentationError",
    "__version__",
    "default_config",
    "evaluate",
    "exact_config",
    "generate_page",
    "horizontal_profile",
    "load_image",
    "otsu_threshold",
    "render_overlay",
    "render_overlay_gray",
    "render_overlay_rgb",
    "segment_page",
    "vertical_profile",
    "write_image",
]
