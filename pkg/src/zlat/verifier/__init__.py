"""Theorem catalogue, corpus enumeration and counterexample search."""

from .corpus import CorpusSpec, corpus, enumerate_corpus
from .search import PROPERTIES, SearchResult, search_counterexample
from .theorems import CATALOG, TheoremReport, Verdict, recheck, run_theorems
