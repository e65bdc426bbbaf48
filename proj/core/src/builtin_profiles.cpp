#include "qxpress/profile.hpp"

namespace qxpress {

namespace {

const std::vector<BracketPair>& standard_brackets() {
    static const std::vector<BracketPair> pairs{{"(", ")"}, {"[", "]"}, {"{", "}"}};
    return pairs;
}

std::set<std::string> merge(std::initializer_list<std::initializer_list<const char*>> groups) {
    std::set<std::string> out;
    for (const auto& g : groups) {
        for (const char* s : g) out.insert(s);
    }
    return out;
}

LanguageProfile python_hosted(std::string id, std::string display_name) {
    LanguageProfile p;
    p.id = std::move(id);
    p.display_name = std::move(display_name);
    p.comment_markers.line = {"#"};
    p.string_delimiters = {
        {"\"\"\"", "\"\"\"", true, StringEscape::backslash},
        {"'''", "'''", true, StringEscape::backslash},
        {"\"", "\"", false, StringEscape::backslash},
        {"'", "'", false, StringEscape::backslash},
    };
    p.string_prefixes = {"rb", "br", "fr", "rf", "r", "u", "b", "f"};
    p.cc_constructs = {"if",   "elif", "for",  "while", "except", "with",   "assert",
                       "list", "set",  "dict", "and",   "or",     "on_each"};
    p.operator_lexemes = merge({
        {"and", "as", "assert", "async", "await", "break", "class", "continue", "def", "del",
         "elif", "else", "except", "finally", "for", "from", "global", "if", "import", "in",
         "is", "lambda", "nonlocal", "not", "or", "pass", "raise", "return", "try", "while",
         "with", "yield"},
        {"+", "-", "*", "**", "/", "//", "%", "@", "<<", ">>", "&", "|", "^", "~", ":=", "<",
         ">", "<=", ">=", "==", "!=", "->", ".", ",", ":", ";", "=", "+=", "-=", "*=", "/=",
         "//=", "%=", "@=", "&=", "|=", "^=", ">>=", "<<=", "**=", "..."},
    });
    p.bracket_pairs = standard_brackets();
    p.comprehension_clause = "for";
    p.docstrings_are_comments = true;
    p.line_continuation = "\\";
    p.file_extensions = {".py"};
    return p;
}

LanguageProfile quapl() {
    LanguageProfile p;
    p.id = "quapl";
    p.display_name = "quAPL";
    p.comment_markers.line = {"⍝"};
    p.string_delimiters = {{"'", "'", false, StringEscape::doubled_quote}};
    p.cc_constructs = {":If", ":ElseIf", ":For", ":While", ":Repeat", ":Select", ":Trap",
                       "¨",   ":"};
    p.operator_lexemes = merge({
        // control structures
        {":If", ":ElseIf", ":Else", ":EndIf", ":AndIf", ":OrIf", ":For", ":In", ":InEach",
         ":EndFor", ":While", ":EndWhile", ":Repeat", ":Until", ":EndRepeat", ":Select",
         ":Case", ":CaseList", ":EndSelect", ":Trap", ":EndTrap", ":Return", ":Leave",
         ":Continue", ":GoTo", ":With", ":EndWith", ":Hold", ":EndHold", ":Namespace",
         ":EndNamespace", ":Class", ":EndClass", ":Field", ":Property", ":EndProperty",
         ":Access", ":Public", ":Private", ":Shared", ":Include", ":Implements", ":Require"},
        // primitive functions and operators, one glyph each
        {"←", "→", "+", "-", "×", "÷", "⌈", "⌊", "*", "⍟", "|", "!", "○", "~", "∨", "∧", "⍱",
         "⍲", "<", "≤", "=", "≥", ">", "≠", "≡", "≢", "⍴", ",", "⍪", "⌽", "⊖", "⍉", "↑", "↓",
         "⊂", "⊃", "⊆", "⌷", "⍋", "⍒", "⍳", "⍸", "∊", "⍷", "∪", "∩", "⊣", "⊢", "⊥", "⊤", "/",
         "\\", "⌿", "⍀", "¨", "⍨", "⍣", ".", "∘", "⍤", "⍥", "@", "⌸", "⌺", "⍠", "⍎", "⍕", "⌹",
         "⋄", "∇", "&", ";", ":", "#", "⍞", "⌶", "⍫"},
    });
    p.bracket_pairs = standard_brackets();
    p.call_is_operator = false;
    p.identifier_extra = "∆⍙⎕";
    p.unicode_identifiers = false;
    p.operand_glyphs = "⍺⍵";
    p.literal_glyphs = "⍬";
    p.negative_number_prefix = "¯";
    p.file_extensions = {".apl", ".apln", ".aplf", ".aplo", ".aplc", ".dyalog"};
    p.notes = {"quAPL constructs: local default"};
    return p;
}

LanguageProfile qmod() {
    LanguageProfile p;
    p.id = "qmod";
    p.display_name = "Qmod";
    p.comment_markers.line = {"//"};
    p.comment_markers.block = {{"/*", "*/"}};
    p.string_delimiters = {{"\"", "\"", false, StringEscape::backslash}};
    p.cc_constructs = {"if",     "else", "repeat", "within", "apply",
                       "lambda", "and",  "or",     "on_each"};
    p.operator_lexemes = merge({
        {"qfunc", "cfunc", "qstruct", "struct", "enum", "const", "output", "input", "within",
         "apply", "repeat", "if", "else", "control", "invert", "power", "lambda", "and", "or",
         "not", "import", "from", "permutable", "unchecked", "qperm"},
        {"+", "-", "*", "**", "/", "%", "^", "&", "|", "~", "<<", ">>", "<", ">", "<=", ">=",
         "==", "!=", "=", "+=", "-=", "*=", "/=", "^=", "|=", "&=", "->", "=>", ".", ",", ":",
         ";", "::", "..", "?"},
    });
    p.bracket_pairs = standard_brackets();
    p.file_extensions = {".qmod"};
    return p;
}

LanguageProfile qsharp() {
    LanguageProfile p;
    p.id = "qsharp";
    p.display_name = "Q#";
    p.comment_markers.line = {"//"};
    p.string_delimiters = {{"\"", "\"", false, StringEscape::backslash}};
    p.string_prefixes = {"$"};
    p.cc_constructs = {"if",    "elif", "for",   "ApplyToEachA", "MeasureEachZ",
                       "try",   "catch", "repeat", "until"};
    p.operator_lexemes = merge({
        {"namespace", "open", "operation", "function", "body", "adjoint", "controlled", "self",
         "auto", "distribute", "invert", "intrinsic", "is", "Adj", "Ctl", "let", "mutable",
         "set", "use", "using", "borrow", "borrowing", "within", "apply", "if", "elif", "else",
         "for", "in", "while", "repeat", "until", "fixup", "return", "fail", "new", "not", "and",
         "or", "internal", "newtype", "struct", "import", "export", "as"},
        {"+", "-", "*", "/", "%", "^", "==", "!=", "<", ">", "<=", ">=", "=", "<-", "->", "=>",
         "!", "~~~", "&&&", "|||", "^^^", "<<<", ">>>", "+=", "-=", "*=", "/=", "%=", "^=",
         "&&&=", "|||=", "^^^=", "<<<=", ">>>=", "and=", "or=", "w/", "w/=", "..", "...",
         "::", ".", ",", ":", ";", "?", "|", "@", "'"},
    });
    p.bracket_pairs = standard_brackets();
    p.file_extensions = {".qs"};
    return p;
}

}  // namespace

ProfileRegistry builtin_profiles() {
    ProfileRegistry registry;
    registry.add(python_hosted("qiskit", "Qiskit"));
    registry.add(python_hosted("cirq", "Cirq"));
    registry.add(python_hosted("qrisp", "Qrisp"));
    registry.add(quapl());
    registry.add(qmod());
    registry.add(qsharp());
    return registry;
}

}  // namespace qxpress
