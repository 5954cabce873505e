from .lexer import ParseError, tokenize
from .parser import parse_formula, parse_program, parse_term
from .printer import Style, print_formula, print_program, print_term, print_theorem, print_triple
from .script import CheckError, Report, check_script, parse_script, print_script

__all__ = [
    "ParseError", "tokenize", "parse_formula", "parse_program", "parse_term",
    "Style", "print_formula", "print_program", "print_term", "print_theorem",
    "print_triple", "CheckError", "Report", "check_script", "parse_script",
    "print_script",
]
