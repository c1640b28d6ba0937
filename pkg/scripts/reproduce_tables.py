"""
Reproduces a published table from a config and reports how far each printed value is from it

python scripts/reproduce_tables.py scripts/cfgs/example1.yml
python scripts/reproduce_tables.py scripts/cfgs/example3.yml format=csv workspace=null
"""
import sys
import time

import numpy as np
from omegaconf import OmegaConf

from abelfrac.abel import AbelProblem, get_preset
from abelfrac.cfg.parse import parse_cfg
from abelfrac.cli.config import build_run_config
from abelfrac.cli.main import COMMAND_FNS, build_logger
from abelfrac.cli.render import render


def main(cfg):
    run_cfg = build_run_config(OmegaConf.to_container(cfg))
    logger = build_logger(run_cfg)

    problem = AbelProblem.create(run_cfg.f, run_cfg.alpha, upper=max(run_cfg.points))
    start_t = time.time()
    report = COMMAND_FNS[run_cfg.command](run_cfg, problem, logger)
    delta = time.time() - start_t
    sys.stdout.write(render(report, run_cfg.format, run_cfg.digits))
    logger.save_result("results.csv", render(report, "csv"))
    logger.save_result("results.json", render(report, "json"))

    preset = get_preset(run_cfg.preset) if run_cfg.preset is not None else None
    if preset is not None and run_cfg.command == "table" and run_cfg.points == preset.points:
        logger.store(tag="time", seconds=delta)
        for i, k in enumerate(run_cfg.ks):
            if k not in preset.table:
                continue
            ours = np.array([row[1 + i] for row in report.table])
            logger.store(tag="deviation", log_summary=True, **{f"k{k}": np.abs(ours - np.array(preset.table[k]))})
        exact = np.array([row[-2] for row in report.table])
        logger.store(tag="deviation", log_summary=True, exact=np.abs(exact - np.array(preset.table_exact)))
        logger.print(f"deviation from the published {run_cfg.preset} table", color="cyan", bold=True)
        logger.pretty_print_table(logger.log(step=len(run_cfg.ks)))
        logger.reset()


if __name__ == "__main__":
    cfg = parse_cfg(default_cfg_path=sys.argv[1], overrides=sys.argv[2:])
    main(cfg)
