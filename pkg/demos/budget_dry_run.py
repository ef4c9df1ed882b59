"""Query budgets implied by the shipped configs, and by halving each factor.

The budget is epochs x batch size x clone steps (twice that for the AE
strategy, which queries both the clean sample and its adversarial
counterpart). Nothing is trained and no query is made.

    python demos/budget_dry_run.py
"""

from pathlib import Path

from robsteal.harness import resolve_config

CONFIGS = Path(__file__).resolve().parents[1] / "configs"


def main():
    for path in sorted(CONFIGS.glob("*.json")):
        cfg = resolve_config(path)
        a = cfg.attack
        print(f"{path.name:32s} E={a.epochs} B={a.batch_size} N_C={a.clone_steps} -> {cfg.implied_budget:,}")
    base = resolve_config({})
    for key in ("epochs", "batch_size", "clone_steps"):
        half = getattr(base.attack, key) // 2
        print(f"cifar10 with {key}={half:<4d} -> {resolve_config({'attack': {key: half}}).implied_budget:,}")
    print(f"cifar10 strategy AE          -> {resolve_config({'attack': {'strategy': 'AE'}}).implied_budget:,}")


if __name__ == "__main__":
    main()
