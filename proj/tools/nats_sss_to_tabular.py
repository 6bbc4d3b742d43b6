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

"""Converts a NATS-Bench size-search (sss) benchmark to the tabular format.

Needs the `nats_bench` package and a local copy of the sss benchmark files
(set TORCH_HOME or pass --benchmark). Usage:

  python3 tools/nats_sss_to_tabular.py --dataset cifar10 \
      --out data/nats_sss_cifar10.json

Validation accuracy comes from the held-out split (cifar10-valid for
cifar10), test accuracy from the full dataset entry. Accuracies are stored
as fractions. Every hyper-parameter schedule in --epochs is written as its
own epoch key, so configs can pick one with epoch_budget.
"""

import argparse
import json
import pathlib
import sys

CHANNELS = [64, 56, 48, 40, 32, 24, 16, 8]  # option order of nats_sss.json

VALID_SPLIT = {"cifar10": "cifar10-valid", "cifar100": "cifar100",
               "ImageNet16-120": "ImageNet16-120"}


def choices_of(arch_str):
  return [CHANNELS.index(int(c)) for c in arch_str.split(":")]


def main():
  ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
  ap.add_argument("--dataset", default="cifar10", choices=sorted(VALID_SPLIT))
  ap.add_argument("--epochs", default="01,12,90",
                  help="comma-separated sss schedules to export")
  ap.add_argument("--benchmark", default=None,
                  help="benchmark file or directory (default: $TORCH_HOME)")
  ap.add_argument("--out", required=True, type=pathlib.Path)
  args = ap.parse_args()

  try:
    from nats_bench import create
  except ImportError:
    sys.exit("nats_bench is not installed (pip install nats_bench)")

  api = create(args.benchmark, "sss", fast_mode=True, verbose=False)
  schedules = [s.strip() for s in args.epochs.split(",") if s.strip()]
  rows = []
  for index in range(len(api)):
    arch = api.arch(index)
    row = {"choices": choices_of(arch), "val_acc": {}, "test_acc": {},
           "train_seconds": {}, "cost": {}}
    for hp in schedules:
      epoch = str(int(hp))
      valid = api.get_more_info(index, VALID_SPLIT[args.dataset], hp=hp,
                                is_random=False)
      test = api.get_more_info(index, args.dataset, hp=hp, is_random=False)
      row["val_acc"][epoch] = valid["valid-accuracy"] / 100.0
      row["test_acc"][epoch] = test["test-accuracy"] / 100.0
      row["train_seconds"][epoch] = valid["train-all-time"]
    cost = api.get_cost_info(index, args.dataset, hp=schedules[-1])
    row["cost"] = {"channels": sum(int(c) for c in arch.split(":")),
                   "flops": cost["flops"], "params": cost["params"]}
    rows.append(row)

  if len(rows) != 32768:
    print(f"warning: {len(rows)} rows, expected 32768", file=sys.stderr)
  args.out.parent.mkdir(parents=True, exist_ok=True)
  with args.out.open("w") as f:
    json.dump({"space_name": "nats_sss",
               "metrics": ["channels", "flops", "params"],
               "rows": rows}, f)
  print(f"wrote {len(rows)} rows to {args.out}")


if __name__ == "__main__":
  main()
