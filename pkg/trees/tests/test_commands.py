from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

import trees
from project.cli import main
from trees.exceptions import ExitStatus
from trees.formats import format_matrix, parse_edge_list
from trees.tree_core import canonical_newick

from .factories import unit_cycle_metric


def run(name, *args, **options):
    out = StringIO()
    call_command(name, *args, stdout=out, **options)
    return out.getvalue()


def failure(name, *args, **options):
    out = StringIO()
    with pytest.raises(CommandError) as exc_info:
        call_command(name, *args, stdout=out, **options)
    return exc_info.value.returncode, out.getvalue()


# =========================
# encode / decode
# =========================
def test_encode_example_tree(golden, golden_path):
    assert run('encode', input=str(golden_path('example_tree.txt'))) == golden('example_tree.exc')


def test_decode_two_leaf_star():
    assert run('decode', stdin='0 1 0 1 0') == '(1,2)0;\n'
    assert run('decode', '--labels', 'none', stdin='0 1 0 1 0') == '(,);\n'


def test_decode_to_dot():
    assert run('decode', '--format', 'dot', stdin='0 1 0\n').splitlines() == [
        'digraph tree {',
        '  0 [label="0"];',
        '  1 [label="1"];',
        '  0 -> 1;',
        '}',
    ]


def test_encode_decode_pipe_is_bit_exact(golden, golden_path):
    source = golden('example_tree.txt')
    runs = []
    for _ in range(2):
        exc = run('encode', stdin=source)
        runs.append(run('decode', '--labels', 'none', stdin=exc))
    assert runs[0] == runs[1] == golden('example_tree.shape.newick')
    assert runs[0] == canonical_newick(parse_edge_list(source), labels=False) + '\n'


def test_excdist():
    assert run('excdist', '1', '5', stdin='0 1 2 1 0 1 0') == '2\n'
    code, _ = failure('excdist', '1', '9', stdin='0 1 2 1 0 1 0')
    assert code == ExitStatus.BAD_INPUT


def test_decode_rejects_bad_excursion():
    code, _ = failure('decode', stdin='0 1 1 0')
    assert code == ExitStatus.BAD_INPUT


def test_random_exc_is_seeded():
    assert run('random_exc', '1') == '0 1 0\n'
    assert run('random_exc', '20', '--seed', '4') == run('random_exc', '20', '--seed', '4')
    code, _ = failure('random_exc', '0')
    assert code == ExitStatus.BAD_INPUT


def test_random_exc_accepts_negative_seeds():
    out = run('random_exc', '12', '--seed', '-1')
    assert out == run('random_exc', '12', '--seed', str(2**64 - 1))
    assert len(out.split()) == 25


def test_random_exc_default_seed_comes_from_settings(settings):
    settings.TREEKIT_SEED = 9
    assert run('random_exc', '15') == run('random_exc', '15', '--seed', '9')


# =========================
# Tree metrics
# =========================
def test_dist(golden):
    assert run('dist', '3', '2', stdin=golden('example_tree.txt')) == '3\n'
    code, _ = failure('dist', '3', '8', stdin=golden('example_tree.txt'))
    assert code == ExitStatus.BAD_INPUT


def test_hyperbolic_four_cycle_fails_with_status_three(golden_path):
    code, out = failure('hyperbolic', input=str(golden_path('four_cycle.txt')))
    assert code == ExitStatus.PROPERTY_VIOLATED
    assert out == 'zero_hyperbolic false\nworst_violation 2\nwitness 0 1 2 3\n'


def test_hyperbolic_tree_graph_passes():
    out = run('hyperbolic', '--format', 'graph', stdin='4 3\n0 1 1\n1 2 1\n1 3 2\n')
    assert out == 'zero_hyperbolic true\nworst_violation 0\nwitness 0 1 2 3\n'


def test_hyperbolic_rejects_non_metric():
    code, _ = failure('hyperbolic', stdin='2\n0 1\n2 0\n')
    assert code == ExitStatus.DOMAIN_ERROR


def test_hyperbolic_scans_everything_by_default():
    code, out = failure('hyperbolic', stdin=format_matrix(unit_cycle_metric(42)))
    assert code == ExitStatus.PROPERTY_VIOLATED
    assert 'sampled' not in out


def test_hyperbolic_sampling_follows_settings(settings):
    settings.FOUR_POINT_EXHAUSTIVE_LIMIT = 4
    settings.FOUR_POINT_SAMPLES = 100
    cycle = '5\n0 1 2 2 1\n1 0 1 2 2\n2 1 0 1 2\n2 2 1 0 1\n1 2 2 1 0\n'
    code, out = failure('hyperbolic', stdin=cycle)
    assert code == ExitStatus.PROPERTY_VIOLATED
    assert 'worst_violation 1\n' in out
    assert 'sampled ' in out


# =========================
# Contour trees
# =========================
def test_contour_tree_newick_matches_golden(golden, golden_path):
    path = str(golden_path('path_field.txt'))
    first = run('contour_tree', input=path)
    second = run('contour_tree', input=path)
    assert first == second == golden('path_field.newick')


def test_contour_tree_dot_matches_golden(golden):
    out = run('contour_tree', '--format', 'dot', stdin=golden('path_field.txt'))
    assert out == golden('path_field.dot')


def test_lambda(golden):
    field = golden('path_field.txt')
    assert run('lambda', '0', '2', stdin=field) == '2\n'
    assert run('lambda', '2', '2', stdin=field) == '7\n'


def test_contour_tree_rejects_disconnected_field():
    code, _ = failure('contour_tree', stdin='2 0\n0 1\n1 1\n')
    assert code == ExitStatus.BAD_INPUT


# =========================
# Path forests
# =========================
def test_path_tree():
    assert run('path_tree', stdin='a b\na c\n') == '((b,c)a);\n'


def test_path_dist():
    paths = 'a b c\na b d\n\na\n'
    assert run('path_dist', '0', '1', stdin=paths) == '2\n'
    assert run('path_dist', '3', '2', stdin=paths) == '1\n'
    code, _ = failure('path_dist', '0', '4', stdin=paths)
    assert code == ExitStatus.BAD_INPUT


@pytest.mark.parametrize(
    'alias, name, args, source',
    [
        ('contour-tree', 'contour_tree', (), 'path_field.txt'),
        ('path-tree', 'path_tree', (), None),
        ('path-dist', 'path_dist', ('0', '1'), None),
        ('random-exc', 'random_exc', ('10', '--seed', '3'), None),
    ],
)
def test_hyphenated_command_names(golden, alias, name, args, source):
    options = {}
    if name != 'random_exc':
        options['stdin'] = golden(source) if source else 'a b c\na b d\n'
    assert run(alias, *args, **options) == run(name, *args, **options)


def test_hyphenated_names_reach_the_command_line(golden_path, capsys):
    main(['treekit', 'contour-tree', '--input', str(golden_path('path_field.txt'))])
    assert capsys.readouterr().out == '(1[&height=5]:3,2[&height=7]:5)0[&height=2];\n'


# =========================
# Process surface
# =========================
def test_missing_input_file(tmp_path):
    code, _ = failure('encode', input=str(tmp_path / 'missing.txt'))
    assert code == ExitStatus.BAD_INPUT


def test_usage_errors_exit_with_status_one(capsys):
    with pytest.raises(SystemExit) as exc_info:
        main(['treekit', 'dist', '1'])
    assert exc_info.value.code == ExitStatus.BAD_INPUT
    assert 'usage' in capsys.readouterr().err


def test_property_violation_exit_status(golden_path, capsys):
    with pytest.raises(SystemExit) as exc_info:
        main(['treekit', 'hyperbolic', '--input', str(golden_path('four_cycle.txt'))])
    assert exc_info.value.code == ExitStatus.PROPERTY_VIOLATED
    assert 'worst_violation 2' in capsys.readouterr().out


def test_version(capsys):
    main(['treekit', '--version'])
    assert capsys.readouterr().out == trees.__version__ + '\n'
