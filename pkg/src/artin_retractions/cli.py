"""
Command-line interface for the Artin retraction toolkit
"""

import functools
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

import click

from . import __version__
from .coherence import CoherenceReport, coherence_fc, coherence_general
from .config import Config
from .coxeter_graph import LabeledGraph, is_chordal, is_odd_odd_free
from .errors import (AmbiguousOddTarget, ArtinValidationError, InconsistentResult, NotInScope,
                     PreconditionError)
from .finite_type import is_fc_type, is_spherical, spherical_components
from .formats import parse_graph, parse_subset, parse_word, to_dot
from .logging_setup import configure_logging, get_category_logger
from .normal_forms import dihedral_nf
from .oracles import abelianization_classes, f2_system_search, triangle_234_search
from .parabolic import (ParabolicDescriptor, amalgam_split, conj_generators, elementary_ribbon,
                        extended_retraction, intersect_rewrite, oc_sets, x_perp)
from .reports import (build_report, dump_report, image_json, labels_json, render_text_report,
                      subset_json)
from .retractions import RetractionEngine, admits_retractions_fc, verify_retraction
from .words import apply_map

logger = get_category_logger("cli")

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INVALID = 2
EXIT_INCONSISTENT = 3


def report_options(func):
    """--graph and --json on every subcommand"""
    func = click.option('--json', 'as_json', is_flag=True, default=False,
                        help='Emit a JSON report on stdout')(func)
    func = click.option('--graph', 'graph_file', type=click.Path(dir_okay=False),
                        help='Graph file (convention/vertex/edge lines)')(func)
    return func


def guarded(func):
    """Map library errors onto exit statuses"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except InconsistentResult as e:
            click.echo(f"Internal inconsistency: {str(e)}", err=True)
            sys.exit(EXIT_INCONSISTENT)
        except (ArtinValidationError, PreconditionError) as e:
            click.echo(f"Error: {str(e)}", err=True)
            sys.exit(EXIT_INVALID)
        except OSError as e:
            click.echo(f"Error reading input: {str(e)}", err=True)
            sys.exit(EXIT_INVALID)
    return wrapper


def _display_path(path: str) -> str:
    """Path relative to the working directory when the file lies below it"""
    try:
        return Path(path).resolve().relative_to(Path.cwd().resolve()).as_posix()
    except ValueError:
        return path


class Invocation:
    """Per-command state: resolved global flags and report emission"""

    def __init__(self, ctx: click.Context, command: str, graph_file: Optional[str], as_json: bool):
        parent = ctx.obj or {}
        self.command = command
        self.graph_file = graph_file or parent.get('graph_file')
        self.as_json = as_json or parent.get('as_json', False)
        self._graph: Optional[LabeledGraph] = None

    @property
    def graph(self) -> LabeledGraph:
        if self._graph is None:
            if not self.graph_file:
                raise click.UsageError(f"'{self.command}' needs --graph FILE")
            text = Path(self.graph_file).read_text(encoding="utf-8")
            self._graph = parse_graph(text)
            logger.debug("graph loaded", path=self.graph_file, vertices=len(self._graph))
        return self._graph

    def inputs(self, **values: Any) -> Dict[str, Any]:
        found = {key: value for key, value in values.items() if value is not None}
        if self.graph_file:
            found['graph'] = _display_path(self.graph_file)
        return found

    def finish(self, inputs: Dict[str, Any], result: Dict[str, Any], rows: List,
               witnesses: Optional[List[Any]] = None, verdict: Optional[bool] = None,
               verdict_text: str = "", details: Optional[List[str]] = None,
               negative: bool = False, trailer: Optional[str] = None) -> None:
        if self.as_json:
            report = build_report(self.command, inputs, result, witnesses)
            click.echo(dump_report(report))
        else:
            title = self.command.replace('-', ' ').title()
            click.echo(render_text_report(title, rows, verdict, verdict_text, details))
            if trailer:
                click.echo(trailer, nl=False)
        sys.exit(EXIT_NEGATIVE if negative else EXIT_OK)


@click.group()
@click.version_option(version=__version__)
@click.option('--graph', 'graph_file', type=click.Path(dir_okay=False), help='Graph file')
@click.option('--json', 'as_json', is_flag=True, default=False, help='Emit JSON reports')
@click.option('--log-level', default=None, help='Diagnostic log level (default from ARTIN_LOG_LEVEL)')
@click.pass_context
def cli(ctx, graph_file, as_json, log_level):
    """Artin groups and retractions to parabolic subgroups

    Classify labeled Coxeter graphs, build ordinary retractions, rewrite
    intersections of parabolic subgroups, decide coherence and run the
    bounded search oracles.
    """
    configure_logging(log_level)
    ctx.ensure_object(dict)
    ctx.obj.update(graph_file=graph_file, as_json=as_json)


@cli.command()
@report_options
@click.option('--dot', is_flag=True, help='Also print the graph in Graphviz format')
@click.pass_context
@guarded
def classify(ctx, graph_file, as_json, dot):
    """FC type, spherical components, retractions and (odd,odd)-freeness"""
    run = Invocation(ctx, 'classify', graph_file, as_json)
    g = run.graph
    fc = is_fc_type(g)
    components = spherical_components(g)
    witnesses: List[Any] = []
    details = []
    admits: Optional[bool] = None
    method: Optional[str] = None

    if fc:
        report = admits_retractions_fc(g)
        admits, method = report.admits, 'fc-theorem'
        for triangle in report.offending_triangles:
            witnesses.append({
                'subset': list(triangle.subset),
                'labels': labels_json(triangle.labels),
                'reason': triangle.reason.value,
            })
            details.append(f"triangle {{{', '.join(triangle.subset)}}} "
                           f"({', '.join(labels_json(triangle.labels))}): {triangle.reason.value}")
    elif len(g) <= Config.MAX_SUBSET_VERTICES:
        failure = RetractionEngine(g).first_failure()
        admits, method = failure is None, 'ordinary-verifier'
        if failure is not None:
            witness: Dict[str, Any] = {'subset': subset_json(failure.subset), 'reason': failure.reason}
            if failure.edge:
                witness['edge'] = list(failure.edge)
            if failure.vertex:
                witness['vertex'] = failure.vertex
            witnesses.append(witness)
            details.append(f"subset {{{', '.join(sorted(failure.subset))}}}: {failure.reason}")

    result = {
        'vertices': list(g.vertices),
        'fc_type': fc,
        'spherical': is_spherical(g),
        'components': [{'vertices': subset_json(c), 'type': str(name)} for c, name in components],
        'odd_odd_free': is_odd_odd_free(g),
        'chordal': is_chordal(g),
        'admits': admits,
        'admits_method': method,
    }
    if dot and as_json:
        result['dot'] = to_dot(g)
    rows = [
        ('Vertices', list(g.vertices)),
        ('FC type', 'yes' if fc else 'no'),
        ('Spherical', 'yes' if result['spherical'] else 'no'),
        ('Components', ', '.join(f"{{{', '.join(sorted(c))}}}: {name}" for c, name in components)),
        ('(odd,odd)-free', 'yes' if result['odd_odd_free'] else 'no'),
        ('Chordal', 'yes' if result['chordal'] else 'no'),
        ('Retraction method', method),
    ]
    verdict_text = ("admits retractions to all standard parabolics" if admits
                    else "retractions fail" if admits is False else "admissibility not decided")
    run.finish(run.inputs(dot=dot or None), result, rows, witnesses,
               verdict=admits, verdict_text=verdict_text, details=details,
               trailer=to_dot(g) if dot and not as_json else None)


@cli.command()
@report_options
@click.option('--set', 'subset', required=True, help='Target generators X, comma separated')
@click.option('--word', required=True, help="Word such as 'a b a^-1'")
@click.pass_context
@guarded
def retract(ctx, graph_file, as_json, subset, word):
    """Apply the ordinary retraction onto A_X to a word"""
    run = Invocation(ctx, 'retract', graph_file, as_json)
    g = run.graph
    target = parse_subset(subset, g)
    w = parse_word(word, g.vertices)
    m = RetractionEngine(g).ordinary_map(target)
    image = apply_map(m, w)
    result = {'image': str(image), 'map': {v: image_json(i) for v, i in m.as_dict().items()}}
    rows = [('X', sorted(target)), ('Word', w),
            ('Map', ', '.join(f"{v} -> {image_json(i)}" for v, i in m.as_dict().items())),
            ('Image', image)]
    run.finish(run.inputs(set=subset_json(target), word=word), result, rows)


@cli.command()
@report_options
@click.option('--m', 'm', type=int, required=True, help='Dihedral label m >= 2')
@click.option('--word', required=True, help='Word over a and b')
@click.pass_context
@guarded
def nf(ctx, graph_file, as_json, m, word):
    """Garside normal form in the dihedral Artin group I2(m)"""
    run = Invocation(ctx, 'nf', graph_file, as_json)
    form = dihedral_nf(m, parse_word(word, ('a', 'b')))
    result = {
        'm': m,
        'power': form.power,
        'factors': [str(f) for f in form.factors],
        'canonical_length': form.canonical_length,
        'normal_form': str(form),
    }
    rows = [('m', m), ('Word', word), ('Delta power', form.power),
            ('Factors', [str(f) for f in form.factors]), ('Normal form', form)]
    run.finish(run.inputs(m=m, word=word), result, rows)


@cli.command()
@report_options
@click.option('--x', 'x_text', required=True, help='Generator set X')
@click.option('--y', 'y_text', required=True, help='Generator set Y')
@click.pass_context
@guarded
def csets(ctx, graph_file, as_json, x_text, y_text):
    """O- and C-sets of a pair of generator subsets"""
    run = Invocation(ctx, 'csets', graph_file, as_json)
    g = run.graph
    xs, ys = parse_subset(x_text, g), parse_subset(y_text, g)
    sets = oc_sets(g, xs, ys)
    result = {
        'o_xy': subset_json(sets.o_xy), 'c_xy': subset_json(sets.c_xy),
        'o_yx': subset_json(sets.o_yx), 'c_yx': subset_json(sets.c_yx),
    }
    rows = [('O_XY', sorted(sets.o_xy)), ('C_XY', sorted(sets.c_xy)),
            ('O_YX', sorted(sets.o_yx)), ('C_YX', sorted(sets.c_yx))]
    run.finish(run.inputs(x=subset_json(xs), y=subset_json(ys)), result, rows)


@cli.command()
@report_options
@click.option('--x', 'x_text', required=True, help='Generator set X')
@click.option('--y', 'y_text', required=True, help='Generator set Y')
@click.option('--f', 'f_text', default='1', help='Conjugator of A_X')
@click.option('--g', 'g_text', default='1', help='Conjugator of A_Y')
@click.pass_context
@guarded
def intersect(ctx, graph_file, as_json, x_text, y_text, f_text, g_text):
    """Rewrite f A_X f^-1 and g A_Y g^-1 over C-sets"""
    run = Invocation(ctx, 'intersect', graph_file, as_json)
    graph = run.graph
    xs, ys = parse_subset(x_text, graph), parse_subset(y_text, graph)
    f = parse_word(f_text, graph.vertices)
    gw = parse_word(g_text, graph.vertices)
    rewrite = intersect_rewrite(graph, f, gw, xs, ys)

    def descriptor(p: ParabolicDescriptor) -> Dict[str, Any]:
        return {'conjugator': str(p.conjugator), 'base': subset_json(p.base)}

    result = {'left': descriptor(rewrite.left), 'right': descriptor(rewrite.right),
              'x': str(rewrite.x), 'y': str(rewrite.y)}
    rows = [('x', rewrite.x), ('y', rewrite.y),
            ('Left', rewrite.left), ('Right', rewrite.right)]
    run.finish(run.inputs(x=subset_json(xs), y=subset_json(ys), f=f_text, g=g_text), result, rows)


@cli.command()
@report_options
@click.option('--base', 'base_text', required=True, help='Base generator set X')
@click.option('--conj', 'conj_text', default='1', help='Conjugator f')
@click.option('--word', required=True, help='Word to retract')
@click.pass_context
@guarded
def extend(ctx, graph_file, as_json, base_text, conj_text, word):
    """Retraction onto f A_X f^-1 applied to a word"""
    run = Invocation(ctx, 'extend', graph_file, as_json)
    g = run.graph
    base = parse_subset(base_text, g)
    p = ParabolicDescriptor(parse_word(conj_text, g.vertices), base)
    image = extended_retraction(g, p, parse_word(word, g.vertices))
    rows = [('Subgroup', p), ('Word', word), ('Image', image)]
    run.finish(run.inputs(base=subset_json(base), conj=conj_text, word=word),
               {'image': str(image)}, rows)


def _coherence_json(report: CoherenceReport) -> Dict[str, Any]:
    failure = report.failed_condition
    return {
        'coherent': report.coherent,
        'via': report.via.value,
        'failed_condition': failure.kind.value if failure else None,
        'detail': failure.detail if failure else None,
    }


@cli.command()
@report_options
@click.pass_context
@guarded
def coherence(ctx, graph_file, as_json):
    """Decide coherence of the Artin group"""
    run = Invocation(ctx, 'coherence', graph_file, as_json)
    g = run.graph
    general = coherence_general(g)
    try:
        theorem: Optional[CoherenceReport] = coherence_fc(g)
    except NotInScope:
        theorem = None
    if theorem is not None and theorem.coherent != general.coherent:
        raise InconsistentResult("coherence criteria disagree")

    result = _coherence_json(general)
    result['fc_theorem'] = _coherence_json(theorem) if theorem else None
    witnesses = []
    failure = general.failed_condition
    if failure and failure.subset:
        witnesses.append({'kind': failure.kind.value, 'subset': list(failure.subset)})
    rows = [('Method', general.via.value),
            ('Failed condition', failure.kind.value if failure else None),
            ('Witness', list(failure.subset) if failure and failure.subset else None),
            ('FC theorem', 'applies' if theorem else 'out of scope')]
    run.finish(run.inputs(), result, rows, witnesses, verdict=general.coherent,
               verdict_text='coherent' if general.coherent else 'not coherent',
               negative=not general.coherent)


@cli.command()
@report_options
@click.option('--set', 'subset', required=True, help='Target generators X')
@click.pass_context
@guarded
def verify(ctx, graph_file, as_json, subset):
    """Check that the ordinary map onto A_X is a retraction"""
    run = Invocation(ctx, 'verify', graph_file, as_json)
    g = run.graph
    target = parse_subset(subset, g)
    witnesses: List[Any] = []
    try:
        m = RetractionEngine(g).ordinary_map(target)
    except AmbiguousOddTarget as exc:
        witnesses.append({'vertex': exc.vertex, 'targets': list(exc.targets)})
        result = {'valid': False, 'map': None, 'reason': 'ambiguous odd target'}
        rows = [('X', sorted(target)), ('Reason', str(exc))]
        run.finish(run.inputs(set=subset_json(target)), result, rows, witnesses,
                   verdict=False, verdict_text='no ordinary retraction', negative=True)
        return
    check = verify_retraction(g, target, m)
    if check.witness:
        witnesses.append({'edge': list(check.witness)})
    result = {'valid': bool(check), 'map': {v: image_json(i) for v, i in m.as_dict().items()},
              'reason': None if check else 'relation violated'}
    rows = [('X', sorted(target)),
            ('Map', ', '.join(f"{v} -> {image_json(i)}" for v, i in m.as_dict().items())),
            ('Violated edge', '-'.join(check.witness) if check.witness else None)]
    run.finish(run.inputs(set=subset_json(target)), result, rows, witnesses,
               verdict=bool(check), verdict_text='retraction' if check else 'not a retraction',
               negative=not check)


@cli.command('search-f2')
@report_options
@click.option('--r', 'r', type=int, required=True, help='Odd length r')
@click.option('--s', 's', type=int, default=2, help='Even length s')
@click.option('--len', 'max_len', type=int, required=True, help='Maximal word length')
@click.option('--single', is_flag=True, help='Only the first equation (control run)')
@click.pass_context
@guarded
def search_f2(ctx, graph_file, as_json, r, s, max_len, single):
    """Search F(a,b) for x with (a,x)_r = (x,a)_r and (b,x)_s = (x,b)_s"""
    run = Invocation(ctx, 'search-f2', graph_file, as_json)
    outcome = f2_system_search(r, s, max_len, single_equation=single)
    found = str(outcome.found) if outcome.found is not None else None
    result = {'found': found, 'searched_count': outcome.searched_count, 'bound': outcome.bound}
    rows = [('r', r), ('s', None if single else s), ('Bound', max_len),
            ('Words searched', outcome.searched_count), ('Solution', found)]
    contradiction = outcome.found is not None and not single
    run.finish(run.inputs(r=r, s=None if single else s, len=max_len, single=single or None),
               result, rows, [found] if found else [],
               verdict=outcome.found is None if not single else outcome.found is not None,
               verdict_text='no solution' if outcome.found is None else f'solution x = {found}',
               negative=contradiction)


@cli.command('search-234')
@report_options
@click.option('--len', 'max_len', type=int, required=True, help='Maximal canonical length')
@click.option('--commutation-only', is_flag=True, help='Control run: only require ax = xa')
@click.pass_context
@guarded
def search_234(ctx, graph_file, as_json, max_len, commutation_only):
    """Search A(I2(4)) for x with ax = xa and bxb = xbx"""
    run = Invocation(ctx, 'search-234', graph_file, as_json)
    outcome = triangle_234_search(max_len, commutation_only=commutation_only)
    found = str(outcome.found) if outcome.found is not None else None
    result = {'found': found, 'searched_count': outcome.searched_count, 'bound': outcome.bound,
              'candidates': outcome.candidates,
              'parity_obstruction_holds': outcome.parity_obstruction_holds}
    rows = [('Bound', max_len), ('Elements searched', outcome.searched_count),
            ('Commuting with a', outcome.candidates),
            ('Parity obstruction', 'holds' if outcome.parity_obstruction_holds else 'FAILS'),
            ('Solution', found)]
    contradiction = not commutation_only and (
        outcome.found is not None or not outcome.parity_obstruction_holds)
    run.finish(run.inputs(len=max_len, commutation_only=commutation_only or None),
               result, rows, [found] if found else [],
               verdict=not contradiction,
               verdict_text='no solution' if outcome.found is None else f'x = {found}',
               negative=contradiction)


@cli.command()
@report_options
@click.option('--x', 'x', required=True, help='Generator x')
@click.option('--y', 'y', required=True, help='Generator y')
@click.pass_context
@guarded
def ribbons(ctx, graph_file, as_json, x, y):
    """Elementary ribbon y x y ... of length m_xy - 1"""
    run = Invocation(ctx, 'ribbons', graph_file, as_json)
    ribbon = elementary_ribbon(run.graph, x, y)
    run.finish(run.inputs(x=x, y=y), {'ribbon': str(ribbon)},
               [('x', x), ('y', y), ('Ribbon', ribbon)])


@cli.command()
@report_options
@click.option('--set', 'subset', required=True, help='Starting generator set X')
@click.option('--depth', type=int, default=1, help='Maximal ribbon chain length')
@click.pass_context
@guarded
def conjugators(ctx, graph_file, as_json, subset, depth):
    """Ribbon chains conjugating A_X onto other standard parabolics"""
    run = Invocation(ctx, 'conjugators', graph_file, as_json)
    g = run.graph
    start = parse_subset(subset, g)
    chains = conj_generators(g, start, depth)
    result = {'conjugators': [{'word': str(w), 'target': subset_json(t)} for w, t in chains]}
    details = [f"{w}  ->  {{{', '.join(sorted(t))}}}" for w, t in chains]
    run.finish(run.inputs(set=subset_json(start), depth=depth), result,
               [('X', sorted(start)), ('Depth', depth), ('Chains', len(chains))], details=details)


@cli.command()
@report_options
@click.option('--set', 'subset', required=True, help='Generator set X')
@click.pass_context
@guarded
def xperp(ctx, graph_file, as_json, subset):
    """Generators commuting with every generator of X"""
    run = Invocation(ctx, 'xperp', graph_file, as_json)
    g = run.graph
    xs = parse_subset(subset, g)
    perp = x_perp(g, xs)
    run.finish(run.inputs(set=subset_json(xs)), {'x_perp': subset_json(perp)},
               [('X', sorted(xs)), ('X-perp', sorted(perp))])


@cli.command()
@report_options
@click.option('--x', 'x_text', required=True, help='Generator set X')
@click.option('--y', 'y_text', required=True, help='Generator set Y')
@click.option('--s', 's', required=True, help='Generator s')
@click.pass_context
@guarded
def trichotomy(ctx, graph_file, as_json, x_text, y_text, s):
    """Compare rho_{X and Y}, rho_X rho_Y and rho_Y rho_X on s"""
    run = Invocation(ctx, 'trichotomy', graph_file, as_json)
    g = run.graph
    xs, ys = parse_subset(x_text, g), parse_subset(y_text, g)
    report = RetractionEngine(g).trichotomy(xs, ys, s)
    result = {
        's': s,
        'case': report.case.value,
        'value_intersection': image_json(report.value_intersection),
        'value_xy': image_json(report.value_xy),
        'value_yx': image_json(report.value_yx),
        'exceptional': report.exceptional,
    }
    rows = [('s', s), ('Case', report.case.value),
            ('rho_{X and Y}(s)', image_json(report.value_intersection)),
            ('rho_X(rho_Y(s))', image_json(report.value_xy)),
            ('rho_Y(rho_X(s))', image_json(report.value_yx))]
    run.finish(run.inputs(x=subset_json(xs), y=subset_json(ys), s=s), result, rows)


@cli.command()
@report_options
@click.option('--s', 's', required=True, help='Vertex to split along')
@click.pass_context
@guarded
def amalgam(ctx, graph_file, as_json, s):
    """Amalgam decomposition A_star *_{A_link} A_rest"""
    run = Invocation(ctx, 'amalgam', graph_file, as_json)
    split = amalgam_split(run.graph, s)
    result = {'star': subset_json(split.star), 'link': subset_json(split.link),
              'rest': subset_json(split.rest)}
    rows = [('Star', sorted(split.star)), ('Link', sorted(split.link)), ('Rest', sorted(split.rest))]
    run.finish(run.inputs(s=s), result, rows)


@cli.command()
@report_options
@click.pass_context
@guarded
def abelianize(ctx, graph_file, as_json):
    """Rank of the abelianization and the generator classes"""
    run = Invocation(ctx, 'abelianize', graph_file, as_json)
    classes = abelianization_classes(run.graph)
    result = {'rank': classes.rank, 'class_of': classes.class_of}
    rows = [('Rank', classes.rank),
            ('Classes', ', '.join(f"{v}: {i}" for v, i in sorted(classes.class_of.items())))]
    run.finish(run.inputs(), result, rows)


if __name__ == '__main__':
    cli()
