#!/usr/bin/env python3
# Copyright 2026 The LayerNAS Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes data/spaces/mobilenetv3_small_60m.json.

Option costs are an additive multiply-add proxy: each searched layer is
charged its own convolutions with the neighbouring layers held at their
largest setting. Block-filter layers carry the projection convolutions of
their block. Inputs are 224x224, strides as in the MobileNetV3-Small backbone.
"""

import json
import math
import pathlib


def bneck(name, kernels, expands, in_res, stride, c_in):
  out_res = in_res // stride
  opts = []
  for k in kernels:
    for e in expands:
      cost = in_res * in_res * c_in * e + out_res * out_res * k * k * e
      opts.append({"label": f"k{k}_e{e}", "cost": cost,
                   "payload": {"kernel": k, "expanded": e}})
  return name, opts


def block(name, filters, res, expands):
  opts = [{"label": f"f{f}", "cost": res * res * f * sum(expands),
           "payload": {"filters": f}} for f in filters]
  return name, opts


def main():
  e_a = [144, 136, 128, 120, 112, 104, 96, 88, 80, 72, 68, 64, 60, 56]
  e_b1 = [192, 176, 160, 144, 128, 112, 104, 96, 88, 80, 72, 64]
  e_b2 = [480, 440, 400, 360, 320, 300, 280, 260, 240, 220, 200, 180, 160]
  e_c1 = [240, 200, 180, 160, 140, 120, 100, 90, 80]
  e_c2 = [288, 256, 224, 208, 192, 176, 160, 152, 144, 136, 128, 120]
  e_d1 = [576, 544, 512, 480, 448, 416, 384, 352, 320, 288, 256, 224]
  e_d2 = [1152, 1088, 1024, 960, 896, 832, 768, 704, 640, 576, 516, 448]
  k2, k3 = [3, 5], [3, 5, 7]

  first = ("bneck0_filters",
           [{"label": f"f{c}", "cost": 56 * 56 * (9 * 16 + 16 * c),
             "payload": {"filters": c}} for c in [24, 20, 18, 16, 14, 12]])
  layers = [
      first,
      block("block1_filters", [36, 32, 28, 24, 20, 18, 16], 28, [144, 144]),
      bneck("block1_bneck0", k2, e_a, 56, 2, 24),
      bneck("block1_bneck1", k2, e_a, 28, 1, 36),
      block("block2_filters", [60, 56, 52, 48, 44, 40, 36, 32, 28], 14, [192, 480, 480]),
      bneck("block2_bneck0", k3, e_b1, 28, 2, 36),
      bneck("block2_bneck1", k3, e_b2, 14, 1, 60),
      bneck("block2_bneck2", k3, e_b2, 14, 1, 60),
      block("block3_filters", [96, 88, 80, 72, 64, 60, 56, 52, 48, 44, 40, 36, 32], 14,
            [240, 288]),
      bneck("block3_bneck0", k3, e_c1, 14, 1, 60),
      bneck("block3_bneck1", k3, e_c2, 14, 1, 96),
      block("block4_filters", [192, 176, 160, 144, 128, 120, 112, 104, 96, 88, 80, 72, 64],
            7, [576, 1152, 1152]),
      bneck("block4_bneck0", k3, e_d1, 14, 2, 96),
      bneck("block4_bneck1", k3, e_d2, 7, 1, 192),
      bneck("block4_bneck2", k3, e_d2, 7, 1, 192),
      ("head_conv", [{"label": f"c{c}", "cost": 49 * 192 * c, "payload": {"filters": c}}
                     for c in [864, 576]]),
      ("head_fc", [{"label": f"c{c}", "cost": 864 * c, "payload": {"filters": c}}
                   for c in [1536, 1024]]),
  ]

  out_layers = []
  for name, opts in layers:
    opts = sorted(opts, key=lambda o: -o["cost"])  # stable for ties
    out_layers.append({"name": name, "default": 0, "options": opts})

  sizes = [len(l["options"]) for l in out_layers]
  doc = {
      "name": "mobilenetv3_small_60m",
      "cost_unit": "proxy_madds",
      "mode": "cost_bucket",
      "expected_unique_models": str(math.prod(sizes)),
      "expected_option_sum": sum(sizes),
      "declared_max_cost": sum(l["options"][0]["cost"] for l in out_layers),
      "layers": out_layers,
  }
  root = pathlib.Path(__file__).resolve().parent.parent
  path = root / "data" / "spaces" / "mobilenetv3_small_60m.json"
  path.write_text(json.dumps(doc, indent=1) + "\n")
  print(path, sizes, sum(sizes), math.prod(sizes))


if __name__ == "__main__":
  main()
