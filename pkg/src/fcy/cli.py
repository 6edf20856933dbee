"""Command line front end.  Handlers run in-process unless --url points at
a running service; either way the payload is rendered locally."""
from __future__ import annotations

import sys
from pathlib import Path

import click
from pydantic import ValidationError

from .lattice import LatticeError
from .partitions import PartitionError, parse_ints
from .quiver import QuiverError
from .render import RenderError, render
from .service.handlers import dispatch
from .service.schemas import REQUESTS

EXIT_FAIL, EXIT_ERROR = 1, 2


class CommandError(Exception):
    pass


def _remote(url: str, command: str, body: dict) -> dict:
    import httpx

    try:
        r = httpx.post(f"{url.rstrip('/')}/{command}", json=body, timeout=None)
    except httpx.HTTPError as e:
        raise CommandError(f"cannot reach {url}: {e}") from None
    if r.status_code != 200:
        raise CommandError(f"server answered {r.status_code}: {r.json().get('detail', r.text)}")
    return r.json()


def execute(command: str, params: dict, fmt: str, out: str | None, url: str | None) -> int:
    try:
        req = REQUESTS[command](**{k: v for k, v in params.items() if v is not None})
        body = req.model_dump()
        payload = _remote(url, command, body) if url else dispatch(command, **body)
        text = render(payload, fmt)
    except ValidationError as e:
        msgs = "; ".join(f"{'.'.join(map(str, err['loc'])) or 'input'}: {err['msg']}"
                         for err in e.errors())
        click.echo(f"error: {msgs}", err=True)
        return EXIT_ERROR
    except (CommandError, RenderError, LatticeError, PartitionError, QuiverError, ValueError) as e:
        click.echo(f"error: {e}", err=True)
        return EXIT_ERROR
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)
    return 0 if payload["ok"] else EXIT_FAIL


def _alpha(ctx, param, value):
    if value is None:
        return None
    try:
        return list(parse_ints(value))
    except (ValueError, PartitionError) as e:
        raise click.BadParameter(str(e)) from None


def output_options(fn):
    fn = click.option("--url", default=None, help="Send the request to a running fcy service.")(fn)
    fn = click.option("--out", type=click.Path(dir_okay=False), default=None,
                      help="Write to a file instead of stdout.")(fn)
    fn = click.option("--format", "fmt", type=click.Choice(["text", "json", "dot", "csv"]),
                      default="text", show_default=True)(fn)
    return fn


def instance_options(fn):
    fn = click.option("--cap", type=int, default=None, help="Refuse lattices with more elements.")(fn)
    fn = click.option("--n", type=int, required=True)(fn)
    fn = click.option("--m", type=int, required=True)(fn)
    return fn


alpha_option = click.option("--alpha", callback=_alpha, help="Partition, e.g. 0,2,3,7,7.")


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(package_name="artifact")
def main():
    """Lattices of order ideals of grids and their homological checks.

    Exit status: 0 when every check passes, 1 when a check fails, 2 on bad input.
    """


def _register(name: str, help_text: str, *decorators):
    def cmd(fmt, out, url, **params):
        sys.exit(execute(name, params, fmt, out, url))
    cmd.__doc__ = help_text
    for dec in reversed(decorators):
        cmd = dec(cmd)
    return main.command(name)(output_options(cmd))


_register("lattice", "Export J(m,n) with its cover relations.", instance_options)
_register("antichain", "Classify every antichain, or the family C_alpha with --alpha.",
      instance_options, alpha_option)
_register("resolve", "Print the projective resolution of M_C for C = C_alpha.",
      instance_options, alpha_option)
_register("hom", "Hom-degree table for all pairs, cross-checked by linear algebra.",
      instance_options)
_register("orbit", "Trace the orbit of alpha with the sum-of-sizes certificate.",
      instance_options, alpha_option)
_register("coxeter", "Check M^(m+n+1) = (-1)^(mn) Id for the K0 Serre matrix.",
      instance_options)
_register("presentation", "Export the quiver presentation of J(m,n) (variant u, v or w).",
      instance_options,
      click.option("--variant", type=click.Choice(["u", "v", "w"]), default="u",
                   show_default=True))
_register("auslander", "Build A_s^d or its quadratic dual and run the isomorphism checks.",
      click.option("--s", type=int, required=True), click.option("--d", type=int, required=True),
      click.option("--dual", is_flag=True, default=None, help="Export the quadratic dual."),
      click.option("--m", type=int, default=None, help="Also compare with the tilting object of J(m,n)."),
      click.option("--n", type=int, default=None))
_register("verify", "Run the acceptance checks for J(m,n), or the full suite without --m/--n.",
      click.option("--m", type=int, default=None), click.option("--n", type=int, default=None),
      click.option("--jobs", type=int, default=None, help="Worker processes."),
      click.option("--timings", is_flag=True, default=None, help="Include wall times."))


if __name__ == "__main__":
    main()
