"""Deterministic synthetic corpora built from a small line-oriented recipe.

Recipe lines (``#`` starts a comment)::

    seed 7                       # default seed, overridden by an explicit one
    prefix post                  # document ids are <prefix><0000>, in order
    vocabulary 3000              # size of the generated background word pool
    vocabulary lake reed marsh   # ...or an explicit background word list
    group count=28 background=24 maybe=football,goal p=0.4
    group count=1 terms=football,goal*3 unique=40

Each ``group`` emits ``count`` documents.  A document receives ``background``
distinct words drawn from the pool, every entry of ``terms`` (``word*k``
repeats it k times), ``unique`` fresh words used nowhere else, and with
probability ``p`` one word picked from ``maybe``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .corpus import StopwordList, _read_lines, dump_corpus_records
from .errors import InputFileError

_CONSONANTS = "bcdfghklmnprstvz"
_VOWELS = "aeiou"
_TITLE_WORDS = 3


@dataclass
class Group:
    count: int
    background: int = 0
    terms: list = field(default_factory=list)
    unique: int = 0
    maybe: list = field(default_factory=list)
    p: float = 0.0


@dataclass
class Recipe:
    groups: list = field(default_factory=list)
    seed: int = 0
    prefix: str = "doc"
    vocabulary_size: int = 0
    vocabulary: list = field(default_factory=list)

    @property
    def doc_count(self):
        return sum(g.count for g in self.groups)

    def reserved_words(self):
        words = set()
        for g in self.groups:
            words.update(g.terms)
            words.update(g.maybe)
        return words


def _int(value, path, lineno, what, minimum=0):
    try:
        n = int(value)
    except ValueError:
        raise InputFileError(path, lineno, f"{what} must be an integer, got {value!r}") from None
    if n < minimum:
        raise InputFileError(path, lineno, f"{what} must be >= {minimum}, got {n}")
    return n


def _word_list(value, path, lineno, repeat):
    words = []
    for item in filter(None, value.split(",")):
        word, star, times = item.partition("*")
        if not word.isalnum() or word != word.lower():
            raise InputFileError(path, lineno, f"invalid term {word!r}")
        k = _int(times, path, lineno, f"repeat count of {word!r}", 1) if star else 1
        if star and not repeat:
            raise InputFileError(path, lineno, f"repetition not allowed here: {item!r}")
        words.extend([word] * k)
    return words


def parse_recipe(lines, path="<recipe>") -> Recipe:
    recipe = Recipe()
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *args = line.split()
        if key == "seed" and len(args) == 1:
            recipe.seed = _int(args[0], path, lineno, "seed")
        elif key == "prefix" and len(args) == 1:
            recipe.prefix = args[0]
        elif key == "vocabulary" and args:
            if len(args) == 1 and args[0].isdigit():
                recipe.vocabulary_size = int(args[0])
            else:
                recipe.vocabulary = _word_list(",".join(args), path, lineno, repeat=False)
        elif key == "group":
            recipe.groups.append(_parse_group(args, path, lineno))
        else:
            raise InputFileError(path, lineno, f"unrecognized recipe line {raw.strip()!r}")
    pool = len(recipe.vocabulary) or recipe.vocabulary_size
    for g in recipe.groups:
        if g.background > pool:
            raise InputFileError(path, None,
                                 f"group asks for {g.background} background words but the pool has {pool}")
    return recipe


def _parse_group(args, path, lineno):
    opts = {}
    for arg in args:
        name, eq, value = arg.partition("=")
        if not eq or name in opts:
            raise InputFileError(path, lineno, f"bad group option {arg!r}")
        opts[name] = value
    if "count" not in opts:
        raise InputFileError(path, lineno, "group needs count=N")
    g = Group(count=_int(opts.pop("count"), path, lineno, "count"))
    if "background" in opts:
        g.background = _int(opts.pop("background"), path, lineno, "background")
    if "unique" in opts:
        g.unique = _int(opts.pop("unique"), path, lineno, "unique")
    if "terms" in opts:
        g.terms = _word_list(opts.pop("terms"), path, lineno, repeat=True)
    if "maybe" in opts:
        g.maybe = _word_list(opts.pop("maybe"), path, lineno, repeat=False)
    if "p" in opts:
        try:
            g.p = float(opts.pop("p"))
        except ValueError:
            raise InputFileError(path, lineno, "p must be a number") from None
        if not 0.0 <= g.p <= 1.0:
            raise InputFileError(path, lineno, "p must lie in [0, 1]")
    if opts:
        raise InputFileError(path, lineno, f"unknown group option(s): {', '.join(sorted(opts))}")
    if g.p > 0 and not g.maybe:
        raise InputFileError(path, lineno, "p given without maybe=...")
    return g


def load_recipe(path) -> Recipe:
    return parse_recipe(_read_lines(path), path)


def _pseudo_words(rng, taken):
    """Endless stream of fresh three-syllable words not in ``taken``."""
    while True:
        word = "".join(rng.choice(_CONSONANTS) + rng.choice(_VOWELS) for _ in range(3))
        if word not in taken:
            taken.add(word)
            yield word


def generate(recipe: Recipe, seed: int | None = None) -> list[tuple[str, str, str]]:
    """Expand a recipe into ``(id, title, summary)`` records."""
    rng = random.Random(recipe.seed if seed is None else seed)
    taken = recipe.reserved_words() | StopwordList.default().words
    words = _pseudo_words(rng, taken)
    if recipe.vocabulary:
        pool = list(dict.fromkeys(recipe.vocabulary))
        taken.update(pool)
    else:
        pool = [next(words) for _ in range(recipe.vocabulary_size)]

    records = []
    width = max(4, len(str(max(recipe.doc_count - 1, 0))))
    for g in recipe.groups:
        for _ in range(g.count):
            tokens = rng.sample(pool, g.background) + list(g.terms)
            tokens += [next(words) for _ in range(g.unique)]
            if g.maybe and rng.random() < g.p:
                tokens.append(rng.choice(g.maybe))
            rng.shuffle(tokens)
            doc_id = f"{recipe.prefix}{len(records):0{width}d}"
            records.append((doc_id, " ".join(tokens[:_TITLE_WORDS]), " ".join(tokens[_TITLE_WORDS:])))
    return records


def render(recipe: Recipe, seed: int | None = None) -> str:
    return dump_corpus_records(generate(recipe, seed))
