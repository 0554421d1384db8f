"""
Command-line surface: conversions, counts, polynomials and interval-poset
operations. Exit status is 0 when everything requested succeeded, 1 when a
count check disagrees and 2 when the input is rejected.

    python -m src.cli count --n 4 --oracle
    python -m src.cli poly --tree 110010110100
"""

import json
import sys
from typing import Any, Dict, Optional

import click

from src.config import DEFAULT_MAX_BRUTE_FORCE, DEFAULT_MAX_CATALAN, configure_logging
from src.services.formats import Format
from src.services.tamari_service import INTERVAL_VIEWS, TamariService

FORMAT_NAMES = [fmt.value for fmt in Format]


def _finish(ctx: click.Context, result: Dict[str, Any], human: str) -> None:
    if not result["success"]:
        if ctx.obj["json"]:
            click.echo(json.dumps(result))
        else:
            click.echo(f"error ({result['error_type']}): {result['error']}", err=True)
        ctx.exit(2)
    click.echo(json.dumps(result) if ctx.obj["json"] else human)


@click.group()
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
@click.option("--log-level", default="WARNING", show_default=True, help="loguru level for diagnostics.")
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True, help="Threads used for counting.")
@click.option("--max-catalan", type=click.IntRange(min=1), default=DEFAULT_MAX_CATALAN, show_default=True, help="Desk-scale limit.")
@click.option(
    "--max-brute-force",
    type=click.IntRange(min=1),
    default=DEFAULT_MAX_BRUTE_FORCE,
    show_default=True,
    help="Catalan limit for oracles and interval contents.",
)
@click.pass_context
def cli(ctx: click.Context, as_json: bool, log_level: str, workers: int, max_catalan: int, max_brute_force: int):
    """Tamari and m-Tamari interval-posets."""
    configure_logging(log_level)
    ctx.ensure_object(dict)
    ctx.obj["json"] = as_json
    ctx.obj["service"] = TamariService(max_catalan=max_catalan, workers=workers, max_brute_force=max_brute_force)


@cli.command()
@click.option("--from", "source", type=click.Choice(FORMAT_NAMES), required=True)
@click.option("--to", "target", type=click.Choice(FORMAT_NAMES), required=True)
@click.option("--m", type=click.IntRange(min=1), default=None, help="Arity for ballot and mary formats.")
@click.argument("value")
@click.pass_context
def convert(ctx: click.Context, source: str, target: str, m: Optional[int], value: str):
    """Convert a lattice element between formats."""
    result = ctx.obj["service"].convert(value, source, target, m)
    _finish(ctx, result, result.get("value", ""))


@cli.command()
@click.option("--n", type=click.IntRange(min=0), required=True)
@click.option("--m", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--refined", is_flag=True, help="Also print the count refined by trees.")
@click.option("--oracle", is_flag=True, help="Also count comparable pairs by brute force.")
@click.option("--force", is_flag=True, help="Ignore the desk-scale limit.")
@click.pass_context
def count(ctx: click.Context, n: int, m: int, refined: bool, oracle: bool, force: bool):
    """Count intervals and check them against the closed formula."""
    result = ctx.obj["service"].count(n, m, refined=refined, oracle=oracle, force=force)
    if not result["success"]:
        _finish(ctx, result, "")
    lines = [f"generated {result['generated']} = formula {result['formula']}"]
    if result["generated"] != result["formula"]:
        lines[0] = f"generated {result['generated']} != formula {result['formula']}"
    if "oracle" in result:
        lines.append(f"oracle {result['oracle']}")
    if "refined" in result:
        lines.append(result["refined"]["text"])
    _finish(ctx, result, "\n".join(lines))
    if not result["match"]:
        ctx.exit(1)


@cli.command()
@click.option("--tree", required=True, help="Dyck word of the tree.")
@click.option("--m", type=click.IntRange(min=1), default=None)
@click.option("--mirror", is_flag=True, help="Count the trees above instead.")
@click.option("--b", "with_b", is_flag=True, help="b-refined polynomial.")
@click.option("--at-one", is_flag=True, help="Print the value at x = 1.")
@click.pass_context
def poly(ctx: click.Context, tree: str, m: Optional[int], mirror: bool, with_b: bool, at_one: bool):
    """Tamari polynomial of a tree."""
    result = ctx.obj["service"].poly(tree, m=m, mirror=mirror, b=with_b, at_one=at_one)
    if not result["success"]:
        _finish(ctx, result, "")
    human = str(result["value_at_one"]) if at_one else result["polynomial"]["text"]
    _finish(ctx, result, human)


@cli.command()
@click.option("--relations", required=True, help='JSON relation list or {"size", "relations"} object.')
@click.option("--size", type=click.IntRange(min=0), default=None)
@click.option("--lower", "view", flag_value="lower")
@click.option("--upper", "view", flag_value="upper")
@click.option("--contents", "view", flag_value="contents", default=True)
@click.option("--linext", "view", flag_value="linext")
@click.option("--dot", "view", flag_value="dot")
@click.option("--stats", "view", flag_value="stats")
@click.option("--force", is_flag=True, help="Ignore the desk-scale limit.")
@click.pass_context
def interval(ctx: click.Context, relations: str, size: Optional[int], view: str, force: bool):
    """Views of one interval-poset."""
    assert view in INTERVAL_VIEWS
    result = ctx.obj["service"].interval(relations, view=view, size=size, force=force)
    if not result["success"]:
        _finish(ctx, result, "")
    value = result["value"]
    if view == "linext":
        human = "\n".join(" ".join(map(str, perm)) for perm in value)
    elif isinstance(value, list):
        human = "\n".join(value)
    elif isinstance(value, dict):
        human = json.dumps(value)
    else:
        human = value
    _finish(ctx, result, human)


@cli.command()
@click.option("--left", required=True, help="Left operand as JSON.")
@click.option("--right", "rights", multiple=True, required=True, help="Right operand(s) as JSON, IR_1 first.")
@click.option("--m", type=click.IntRange(min=1), default=None, help="Use the m-composition with m right operands.")
@click.pass_context
def compose(ctx: click.Context, left: str, rights, m: Optional[int]):
    """Compose interval-posets; prints every term and the summed weight."""
    result = ctx.obj["service"].compose(left, list(rights), m)
    if not result["success"]:
        _finish(ctx, result, "")
    lines = [f"{json.dumps(term['poset'])}  {term['weight']}" for term in result["terms"]]
    lines.append(result["weight"])
    _finish(ctx, result, "\n".join(lines))


@cli.command()
@click.option("--relations", required=True)
@click.option("--size", type=click.IntRange(min=0), default=None)
@click.option("--m", type=click.IntRange(min=1), default=None)
@click.pass_context
def decompose(ctx: click.Context, relations: str, size: Optional[int], m: Optional[int]):
    """Print the unique operands an interval-poset is composed from."""
    result = ctx.obj["service"].decompose(relations, size=size, m=m)
    if not result["success"]:
        _finish(ctx, result, "")
    lines = [json.dumps(result["left"])] + [json.dumps(right) for right in result["rights"]]
    _finish(ctx, result, "\n".join(lines))


@cli.command()
@click.option("--n", type=click.IntRange(min=0), required=True)
@click.option("--m", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--force", is_flag=True)
@click.pass_context
def lattice(ctx: click.Context, n: int, m: int, force: bool):
    """DOT text of the cover graph of the (m-)Tamari lattice."""
    result = ctx.obj["service"].lattice(n, m, force=force)
    _finish(ctx, result, result.get("dot", ""))


def main() -> None:
    cli(obj={})


if __name__ == "__main__":
    sys.exit(main())
