"""Command-line front door: catalog browsing, relation generation, the
lattice verification, type-III scans, extension runs, tame arithmetic
checks, and batch campaigns with deterministic, atomically written
reports."""

from __future__ import annotations

import os
import tempfile

import click

from .brauer import pair_classes
from .catalog import catalog_group, catalog_names
from .characters import character
from .errors import MonomialError
from .extend import (
    FreeAbelianGroup,
    check_conditions,
    delta_function,
    extend,
    uniqueness_check,
    verify_tower,
)
from .groups import (
    center,
    closure,
    derived_subgroup,
    full_subgroup,
    is_nilpotent,
    load_group,
    maximal_subgroups,
    normal_subgroups,
    subgroup as make_subgroup,
    subgroup_class_reps,
    trivial_subgroup,
)
from .relations import basic_relations, verify_theorem_2_7
from .tame import check_DH_III_tame, dh1_sweep, galois_delta
from .type3 import complements_census, h1_trivial, is_type_III


# ---------------------------------------------------------------------------
# helpers


def _emit(text: str, out: str | None) -> None:
    """Print, or write atomically (temp file + rename) when --out is set."""
    if out is None:
        click.echo(text, nl=False)
        return
    directory = os.path.dirname(os.path.abspath(out)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".report-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _resolve_group(name: str):
    if os.path.exists(name):
        with open(name) as handle:
            return load_group(handle.read())
    return catalog_group(name)


def _parse_n(g, selector: str):
    sel = selector.strip().lower()
    if sel in ("trivial", "e", "{e}", "1"):
        return trivial_subgroup(g)
    if sel == "full":
        return full_subgroup(g)
    if sel == "center":
        return center(g)
    if sel == "derived":
        return derived_subgroup(g)
    elements = [int(tok) for tok in selector.replace(",", " ").split()]
    n = closure(g, elements)
    if sorted(n.elements) != sorted(set(elements) | {0}):
        raise click.ClickException(
            f"N selector {selector!r} is not a subgroup (closure is {list(n.elements)})"
        )
    return n


def _parse_prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            f = 0
            while q % p == 0:
                q //= p
                f += 1
            if q != 1:
                raise click.ClickException("q must be a prime power")
            return p, f
    raise click.ClickException("q must be a prime power >= 2")


def _group_targets(name: str | None, max_order: int | None):
    if name is not None:
        return [(name, _resolve_group(name))]
    names = catalog_names()
    out = []
    for nm in names:
        g = catalog_group(nm)
        if max_order is None or g.order <= max_order:
            out.append((nm, g))
    return out


# ---------------------------------------------------------------------------
# command tree


@click.group()
def main():
    """Exact verification toolkit for induced-pair rings, their basic
    relations, and tame local constants."""


@main.group()
def catalog():
    """The built-in group catalog."""


@catalog.command("list")
@click.option("--out", default=None, help="Write the report to a file.")
def catalog_list(out):
    lines = ["name order abelian nilpotent"]
    for name in catalog_names():
        g = catalog_group(name)
        lines.append(
            f"{name} {g.order} {g.is_abelian()} {is_nilpotent(g)}"
        )
    _emit("\n".join(lines) + "\n", out)


@main.group()
def group():
    """Inspect a single group (catalog name or group file)."""


@group.command("info")
@click.argument("name")
@click.option("--out", default=None)
def group_info(name, out):
    g = _resolve_group(name)
    lines = [
        f"group {g.name or name}",
        f"order {g.order}",
        f"abelian {g.is_abelian()}",
        f"center {center(g).order}",
        f"derived {derived_subgroup(g).order}",
        f"conjugacy-classes {len(g.conjugacy_classes)}",
        f"normal-subgroups {len(normal_subgroups(g))}",
        f"subgroup-classes {len(subgroup_class_reps(g))}",
        f"maximal-subgroup-classes {len(maximal_subgroups(g))}",
    ]
    _emit("\n".join(lines) + "\n", out)


@main.group()
def relations():
    """Basic relation generators."""


@relations.command("gens")
@click.argument("name")
@click.option("--n", "n_sel", default="trivial", help="Normal subgroup selector.")
@click.option("--kinds", default="I,II,III")
@click.option("--out", default=None)
def relations_gens(name, n_sel, kinds, out):
    g = _resolve_group(name)
    n = _parse_n(g, n_sel)
    kind_list = tuple(k.strip() for k in kinds.split(",") if k.strip())
    try:
        rels = basic_relations(g, n, kind_list)
    except MonomialError as exc:
        raise click.ClickException(f"{type(exc).__name__}: {exc}") from exc
    lines = [f"# {len(rels)} relations, kinds {','.join(kind_list)}"]
    for rel in rels:
        lines.append(f"kind {rel.kind}")
        lines.append(rel.element.serialize())
    _emit("\n".join(lines) + "\n", out)


@main.group()
def verify():
    """Exact verification of the kernel-lattice theorem."""


@verify.command("thm27")
@click.argument("name", required=False)
@click.option("--max-order", type=int, default=None)
@click.option("--kinds", default="I,II,III")
@click.option("--out", default=None)
def verify_thm27(name, max_order, kinds, out):
    kind_list = tuple(k.strip() for k in kinds.split(",") if k.strip())
    lines = []
    ok = True
    for nm, g in _group_targets(name, max_order):
        for n in normal_subgroups(g):
            report = verify_theorem_2_7(g, n, kind_list)
            lines.append(
                f"{nm} N=({' '.join(str(x) for x in n.elements)}) "
                f"relations={report.n_relations} kernel_rank={report.kernel_rank} "
                f"span_rank={report.span_rank} equal={report.equal}"
            )
            ok = ok and report.equal
    lines.append(f"RESULT {'pass' if ok else 'fail'}")
    _emit("\n".join(lines) + "\n", out)
    if not ok:
        raise SystemExit(1)


@main.group()
def type3():
    """Classification of maximal subgroup configurations."""


@type3.command("scan")
@click.argument("name", required=False)
@click.option("--max-order", type=int, default=None)
@click.option("--out", default=None)
def type3_scan(name, max_order, out):
    lines = []
    for nm, g in _group_targets(name, max_order):
        for h in maximal_subgroups(g):
            helems = " ".join(str(x) for x in h.elements)
            try:
                cert = is_type_III(g, h)
            except MonomialError as exc:
                lines.append(f"{nm} H=({helems}) refused {type(exc).__name__}")
                continue
            if cert.degenerate:
                lines.append(f"{nm} H=({helems}) degenerate ell={cert.ell}")
                continue
            census = complements_census(cert)
            q = cert.quotient_map.quotient
            h1 = h1_trivial(
                make_subgroup(q, cert.qh.elements), make_subgroup(q, cert.qc.elements)
            )
            census_ok = census["all_C_conjugate"] and census["count_equals_order_C"]
            lines.append(
                f"{nm} H=({helems}) ell={cert.ell} K={cert.k.order} "
                f"C={cert.c.order} complements={len(census['complements'])} "
                f"census_ok={census_ok} h1_trivial={h1}"
            )
    _emit("\n".join(lines) + "\n", out)


def _parse_delta_file(g, n, text: str):
    vgroup = FreeAbelianGroup()
    assignments = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split("|")]
        if len(parts) != 3:
            raise click.ClickException(
                f"delta line needs 'elements | exponents | value': {raw!r}"
            )
        elements = [int(t) for t in parts[0].split()]
        h = make_subgroup(g, elements, check=True)
        from .characters import canonical_modulus

        modulus = canonical_modulus(h)
        exps = [int(t) for t in parts[1].split()]
        chi = character(h, modulus, exps)
        value = _parse_value(vgroup, parts[2])
        assignments[(h, chi)] = value
    return delta_function(g, n, vgroup, assignments), vgroup


def _parse_value(vgroup, token: str):
    if token == "1":
        return vgroup.one()
    value = vgroup.one()
    for factor in token.split("*"):
        factor = factor.strip()
        if "^" in factor:
            sym, exp = factor.split("^")
            value = vgroup.mul(value, vgroup.pow(vgroup.symbol(sym), int(exp)))
        else:
            value = vgroup.mul(value, vgroup.symbol(factor))
    return value


@main.group(name="extend")
def extend_cmd():
    """Run the extension engine on a group + Delta description."""


@extend_cmd.command("run")
@click.argument("group_file")
@click.argument("delta_file")
@click.option("--n", "n_sel", default="trivial")
@click.option("--full-kernel", is_flag=True, default=False)
@click.option("--out", default=None)
def extend_run(group_file, delta_file, n_sel, full_kernel, out):
    g = _resolve_group(group_file)
    n = _parse_n(g, n_sel)
    with open(delta_file) as handle:
        delta, vgroup = _parse_delta_file(g, n, handle.read())
    lines = [f"group {g.name or group_file} order {g.order}"]
    violations = check_conditions(g, delta)
    if violations:
        first = violations[0]
        lines.append(f"conditions fail ({len(violations)} violations)")
        lines.append(f"first condition {first['condition']}: {first}")
        lines.append("RESULT refused")
        _emit("\n".join(lines) + "\n", out)
        raise SystemExit(1)
    lines.append("conditions pass")
    ext0 = extend(g, n, delta, full_kernel=full_kernel, variant=0)
    ext1 = extend(g, n, delta, full_kernel=full_kernel, variant=1)
    lines.append(f"unique {uniqueness_check(ext0, ext1)}")
    tower = verify_tower(delta, g, n)
    lines.append(f"tower-identities {'pass' if not tower else tower}")
    full = full_subgroup(g)
    from .characters import irreducible_characters

    for i, rho in enumerate(irreducible_characters(g)):
        value = ext0.evaluate(full, rho)
        lines.append(f"F(chi_{i}, dim {rho.dimension()}) = {vgroup.describe(value)}")
    lines.append("RESULT extended")
    _emit("\n".join(lines) + "\n", out)


@main.group()
def tame():
    """Tame local-constant checks."""


@tame.command("dh1")
@click.option("--q", type=int, required=True)
@click.option("--ell", type=int, required=True)
@click.option("--ramified", is_flag=True, default=False)
@click.option("--lpsi", type=int, default=0)
@click.option("--out", default=None)
def tame_dh1(q, ell, ramified, lpsi, out):
    p, f = _parse_prime_power(q)
    try:
        report = dh1_sweep(p, f, ell, ramified, lpsi)
    except MonomialError as exc:
        raise click.ClickException(f"{type(exc).__name__}: {exc}") from exc
    _emit(
        f"dh1 q={q} ell={ell} ramified={ramified} cases={report['cases']} "
        f"verdict={'pass' if report['ok'] else 'fail'}\n",
        out,
    )


@tame.command("dh3")
@click.option("--q", type=int, required=True)
@click.option("--ell", type=int, required=True)
@click.option("--lpsi", type=int, default=0)
@click.option("--out", default=None)
def tame_dh3(q, ell, lpsi, out):
    p, f = _parse_prime_power(q)
    try:
        report = check_DH_III_tame(p, f, ell, lpsi)
    except MonomialError as exc:
        raise click.ClickException(f"{type(exc).__name__}: {exc}") from exc
    _emit(
        f"dh3 q={q} ell={ell} m={report['m']} cases={report['cases']} "
        f"verdict={'pass' if report['ok'] else 'fail'}\n",
        out,
    )


@tame.command("galois-model")
@click.option("--model", required=True,
              type=click.Choice(["unramified", "kummer", "bikummer", "s3"]))
@click.option("--q", type=int, default=2)
@click.option("--ell", type=int, default=None)
@click.option("--degree", type=int, default=None)
@click.option("--lpsi", type=int, default=0)
@click.option("--out", default=None)
def tame_galois_model(model, q, ell, degree, lpsi, out):
    p, f = _parse_prime_power(q)
    try:
        delta = galois_delta(model, p=p, f=f, ell=ell, degree=degree, lpsi=lpsi)
    except MonomialError as exc:
        raise click.ClickException(f"{type(exc).__name__}: {exc}") from exc
    g = delta.ambient.parent
    n = trivial_subgroup(g)
    lines = [f"model {model} q={q} group {g.name} order {g.order}"]
    for cls in pair_classes(full_subgroup(g), n):
        value = delta.values[cls]
        lines.append(f"{cls.serialize()} -> ({value.c!r}, {value.k})")
    violations = check_conditions(g, delta)
    if violations:
        lines.append(f"conditions fail ({len(violations)})")
        lines.append("RESULT refused")
        _emit("\n".join(lines) + "\n", out)
        raise SystemExit(1)
    ext0 = extend(g, n, delta, variant=0)
    ext1 = extend(g, n, delta, variant=1)
    lines.append(f"conditions pass; unique {uniqueness_check(ext0, ext1)}")
    lines.append("RESULT extended")
    _emit("\n".join(lines) + "\n", out)


# ---------------------------------------------------------------------------
# campaigns


@main.group()
def campaign():
    """Batch verification campaigns from a line-oriented file."""


def _campaign_check(check_name, params, targets, lines) -> bool:
    ok = True
    if check_name == "thm2.7":
        kinds = tuple(params.get("kinds", "I,II,III").split(","))
        for nm, g, n in targets:
            report = verify_theorem_2_7(g, n, kinds)
            lines.append(
                f"thm2.7 {nm} N=({' '.join(str(x) for x in n.elements)}) "
                f"equal={report.equal}"
            )
            ok = ok and report.equal
    elif check_name == "type3":
        for nm, g, _ in targets:
            for h in maximal_subgroups(g):
                helems = " ".join(str(x) for x in h.elements)
                try:
                    cert = is_type_III(g, h)
                except MonomialError as exc:
                    lines.append(f"type3 {nm} H=({helems}) refused {type(exc).__name__}")
                    continue
                if cert.degenerate:
                    lines.append(f"type3 {nm} H=({helems}) degenerate")
                    continue
                census = complements_census(cert)
                q = cert.quotient_map.quotient
                good = (
                    census["all_C_conjugate"]
                    and census["count_equals_order_C"]
                    and h1_trivial(
                        make_subgroup(q, cert.qh.elements),
                        make_subgroup(q, cert.qc.elements),
                    )
                )
                lines.append(f"type3 {nm} H=({helems}) ok={good}")
                ok = ok and good
    elif check_name in ("extend", "towers"):
        from .extend import constant_delta

        for nm, g, n in targets:
            delta = constant_delta(g, n, FreeAbelianGroup())
            if check_name == "extend":
                try:
                    extend(g, n, delta)
                    lines.append(f"extend {nm} extended")
                except MonomialError as exc:
                    lines.append(f"extend {nm} refused {type(exc).__name__}")
                    ok = False
            else:
                issues = verify_tower(delta, g, n)
                lines.append(f"towers {nm} issues={len(issues)}")
                ok = ok and not issues
    elif check_name == "dh1":
        p, f = _parse_prime_power(int(params["q"]))
        ramified = params.get("ramified", "false").lower() in ("true", "1", "yes")
        report = dh1_sweep(p, f, int(params["ell"]), ramified)
        lines.append(
            f"dh1 q={params['q']} ell={params['ell']} ramified={ramified} "
            f"ok={report['ok']}"
        )
        ok = ok and report["ok"]
    elif check_name == "dh3":
        p, f = _parse_prime_power(int(params["q"]))
        report = check_DH_III_tame(p, f, int(params["ell"]))
        lines.append(f"dh3 q={params['q']} ell={params['ell']} ok={report['ok']}")
        ok = ok and report["ok"]
    else:
        raise click.ClickException(f"unknown campaign check {check_name!r}")
    return ok


@campaign.command("run")
@click.argument("file")
@click.option("--out", default=None)
def campaign_run(file, out):
    with open(file) as handle:
        text = handle.read()
    targets = []
    checks = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "target":
            name = tokens[1]
            params = dict(t.split("=", 1) for t in tokens[2:])
            g = _resolve_group(name)
            n = _parse_n(g, params.get("N", "trivial"))
            targets.append((name, g, n))
        elif tokens[0] == "check":
            params = dict(t.split("=", 1) for t in tokens[2:])
            checks.append((tokens[1], params))
        else:
            raise click.ClickException(f"bad campaign line: {raw!r}")
    lines = []
    ok = True
    for check_name, params in checks:
        try:
            ok = _campaign_check(check_name, params, targets, lines) and ok
        except MonomialError as exc:
            lines.append(f"{check_name} error {type(exc).__name__}: {exc}")
            ok = False
    lines.append(f"RESULT {'pass' if ok else 'fail'}")
    _emit("\n".join(lines) + "\n", out)
    if not ok:
        raise SystemExit(1)


if __name__ == "__main__":
    main()
