"""Tableau tree reconstruction and qtree emission."""

import re

from anita.checker import check
from anita.corpus import EXAMPLES
from anita.latex import CLOSING_PAIR, OPEN_PATH, build_tree, to_qtree
from anita.script import parse_proof


def tree_of(name):
    script = parse_proof(EXAMPLES[name])
    return build_tree(script, check(script)), script


def tokens(latex: str) -> list[str]:
    return re.findall(r"\\[A-Za-z]+|[{}\[\].$~]|[^\s{}\[\].$~\\]+", latex)


def leaf_count(node) -> int:
    if not node.children:
        return 1
    return sum(leaf_count(c) for c in node.children)


def split_count(node) -> int:
    own = 1 if len(node.children) == 2 else 0
    return own + sum(split_count(c) for c in node.children)


def all_formulas(node):
    yield from node.formulas
    for child in node.children:
        yield from all_formulas(child)


class TestBuildTree:
    def test_transitivity_shape(self):
        tree, _ = tree_of("transitivity")
        assert len(tree.formulas) == 4
        left, right = tree.children
        assert len(left.formulas) == 1 and left.closed and not left.children
        assert len(right.formulas) == 1 and not right.closed
        inner_left, inner_right = right.children
        assert inner_left.closed and inner_right.closed

    def test_single_node(self):
        tree, _ = tree_of("identity")
        assert not tree.children
        assert tree.closed
        assert len(tree.formulas) == 2

    def test_incomplete_open_path_flagged(self):
        tree, _ = tree_of("transitivity-incomplete")
        _, right = tree.children
        assert not right.closed
        assert [hl for _, hl in right.formulas] == [OPEN_PATH]
        assert all(hl == OPEN_PATH for _, hl in tree.formulas)
        left = tree.children[0]
        assert all(hl is None for _, hl in left.formulas)

    def test_closing_pairs_blue_only_when_valid(self):
        tree, _ = tree_of("transitivity")
        flags = [hl for _, hl in all_formulas(tree)]
        assert flags.count(CLOSING_PAIR) == 6
        assert OPEN_PATH not in flags
        tree, _ = tree_of("countermodel-1")
        flags = [hl for _, hl in all_formulas(tree)]
        assert CLOSING_PAIR not in flags
        assert flags.count(OPEN_PATH) == 5

    def test_leaf_count_matches_leaf_blocks(self):
        for name in EXAMPLES:
            tree, script = tree_of(name)
            assert leaf_count(tree) == len(script.leaf_blocks()), name

    def test_every_formula_appears_once(self):
        for name in EXAMPLES:
            tree, script = tree_of(name)
            in_tree = len(list(all_formulas(tree)))
            in_script = sum(1 for ln in script.lines if not ln.is_closure)
            assert in_tree == in_script, name


class TestToQtree:
    def test_identity_golden_string(self):
        tree, _ = tree_of("identity")
        got = to_qtree(tree).splitlines()[-1]
        want = "\\Tree [.{\\color{blue}{$T~A$} \\\\ \\color{blue}{$F~A$}} [.{$\\times$} ] ]"
        assert tokens(got) == tokens(want)

    def test_transitivity_structure(self):
        tree, _ = tree_of("transitivity")
        latex = to_qtree(tree)
        assert latex.count("$\\times$") == 3
        assert latex.count("\\color{blue}") == 6
        assert split_count(tree) == 2
        assert "\\color{red}" not in latex

    def test_open_branch_red(self):
        tree, _ = tree_of("transitivity-incomplete")
        latex = to_qtree(tree)
        assert latex.count("\\color{red}") == 5
        assert "\\color{blue}" not in latex

    def test_both_open_branches_red(self):
        tree, _ = tree_of("countermodel-2")
        latex = to_qtree(tree)
        assert latex.count("\\color{red}") == 4

    def test_single_tree_token_and_balanced_brackets(self):
        for name in EXAMPLES:
            tree, _ = tree_of(name)
            latex = to_qtree(tree)
            assert latex.count("\\Tree") == 1, name
            depth = 0
            for ch in latex.splitlines()[-1]:
                if ch == "[":
                    depth += 1
                elif ch == "]":
                    depth -= 1
                assert depth >= 0, name
            assert depth == 0, name

    def test_package_comment(self):
        tree, _ = tree_of("identity")
        assert to_qtree(tree).startswith("% requires \\usepackage{qtree}")
