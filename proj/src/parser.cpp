#include "qcosmic/parser.hpp"

#include "qcosmic/lexer.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace qcosmic {

namespace {

struct SyntaxError
{
};

bool is_declaration_keyword(const Token& t) noexcept
{
    if (t.kind != TokenKind::keyword)
        return false;
    return t.text == "layer" || t.text == "user" || t.text == "storage" || t.text == "datagroup" ||
           t.text == "process" || t.text == "purpose" || t.text == "scope";
}

bool is_movement_keyword(const Token& t) noexcept
{
    return t.kind == TokenKind::keyword && kind_from_keyword(t.text).has_value();
}

std::string describe(const Token& t)
{
    switch (t.kind) {
    case TokenKind::end_of_input:
        return "end of input";
    case TokenKind::string:
        return "string " + quote(t.text);
    default:
        return "'" + t.text + "'";
    }
}

class Parser
{
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    std::vector<Diagnostic> take_diagnostics() { return std::move(diagnostics_); }
    bool had_syntax_error() const noexcept { return syntax_errors_ > 0; }

    Model parse()
    {
        Model model;
        try {
            model.span = expect_keyword("system").span;
            model.name = expect_string("system name").text;
            expect_punct("{");
        } catch (const SyntaxError&) {
            return model;
        }

        bool declarations_started = false;
        bool any_declaration = false;
        while (!at_end() && !at_punct("}")) {
            try {
                const Token& t = peek();
                if (t.kind == TokenKind::keyword && (t.text == "purpose" || t.text == "scope")) {
                    if (declarations_started) {
                        ++syntax_errors_;
                        diagnostics_.push_back(Diagnostic{Severity::error, "S1",
                                                          "'" + t.text + "' must appear before any declaration",
                                                          t.span, {}});
                    }
                    parse_header(model);
                } else {
                    declarations_started = true;
                    any_declaration = true;
                    parse_declaration(model);
                }
            } catch (const SyntaxError&) {
                synchronize_top_level();
            }
        }

        try {
            expect_punct("}");
            if (!at_end())
                error(peek(), "unexpected " + describe(peek()) + " after end of system");
        } catch (const SyntaxError&) {
        }

        if (!any_declaration && syntax_errors_ == 0)
            diagnostics_.push_back(
                Diagnostic{Severity::warning, "S4", "empty system", model.span, model.name});
        return model;
    }

private:
    const Token& peek() const noexcept { return tokens_[pos_]; }
    bool at_end() const noexcept { return peek().kind == TokenKind::end_of_input; }
    const Token& next() noexcept
    {
        const Token& t = tokens_[pos_];
        if (pos_ + 1 < tokens_.size())
            ++pos_;
        return t;
    }

    bool at_keyword(std::string_view word) const noexcept
    {
        return peek().kind == TokenKind::keyword && peek().text == word;
    }
    bool at_punct(std::string_view p) const noexcept
    {
        return peek().kind == TokenKind::punctuation && peek().text == p;
    }

    [[noreturn]] void error(const Token& at, std::string message)
    {
        ++syntax_errors_;
        diagnostics_.push_back(Diagnostic{Severity::error, "S1", std::move(message), at.span, {}});
        throw SyntaxError{};
    }

    const Token& expect_keyword(std::string_view word)
    {
        if (!at_keyword(word))
            error(peek(), "expected '" + std::string(word) + "', found " + describe(peek()));
        return next();
    }

    const Token& expect_string(std::string_view what)
    {
        if (peek().kind != TokenKind::string)
            error(peek(), "expected " + std::string(what) + " (a quoted string), found " + describe(peek()));
        return next();
    }

    const Token& expect_punct(std::string_view p)
    {
        if (!at_punct(p))
            error(peek(), "expected '" + std::string(p) + "', found " + describe(peek()));
        return next();
    }

    Nature expect_nature()
    {
        if (peek().kind == TokenKind::keyword) {
            if (auto n = nature_from_string(peek().text)) {
                next();
                return *n;
            }
        }
        error(peek(), "expected 'classical' or 'quantum', found " + describe(peek()));
    }

    void duplicate(std::string_view category, const Token& name_token)
    {
        diagnostics_.push_back(Diagnostic{Severity::error, "S2",
                                          "duplicate " + std::string(category) + " name " + quote(name_token.text),
                                          name_token.span, name_token.text});
    }

    // Endpoint categories reuse declaration keywords, so a keyword only starts
    // a declaration when the tokens after it have a declaration's shape.
    bool at_declaration_start() const noexcept
    {
        if (!is_declaration_keyword(peek()))
            return false;
        const Token& second = tokens_[std::min(pos_ + 1, tokens_.size() - 1)];
        const Token& third = tokens_[std::min(pos_ + 2, tokens_.size() - 1)];
        const std::string& word = peek().text;
        if (word == "datagroup")
            return second.kind == TokenKind::string && third.kind == TokenKind::punctuation && third.text == "{";
        if (word == "process")
            return second.kind == TokenKind::string && third.kind == TokenKind::keyword && third.text == "in";
        return second.kind == TokenKind::keyword && nature_from_string(second.text).has_value();
    }

    void synchronize_top_level()
    {
        while (!at_end()) {
            if (at_declaration_start())
                return;
            if (at_punct("}") && tokens_[pos_ + 1].kind == TokenKind::end_of_input)
                return;
            next();
        }
    }

    void parse_header(Model& model)
    {
        const Token& keyword = next();
        std::string& slot = keyword.text == "purpose" ? model.purpose : model.scope;
        bool& seen = keyword.text == "purpose" ? seen_purpose_ : seen_scope_;
        const Token& value = expect_string(keyword.text + " text");
        if (seen) {
            diagnostics_.push_back(Diagnostic{Severity::error, "S2", "duplicate '" + keyword.text + "' header",
                                              keyword.span, model.name});
            return;
        }
        seen = true;
        slot = value.text;
    }

    template <class Element>
    void declare(std::vector<Element>& list, std::set<std::string>& names, std::string_view category,
                 const Token& name_token, Nature nature)
    {
        if (!names.insert(name_token.text).second) {
            duplicate(category, name_token);
            return;
        }
        list.push_back(Element{name_token.text, nature, name_token.span});
    }

    void parse_declaration(Model& model)
    {
        const Token& t = peek();
        if (t.kind != TokenKind::keyword)
            error(t, "expected a declaration, found " + describe(t));

        if (t.text == "layer" || t.text == "user" || t.text == "storage") {
            const std::string keyword = next().text;
            Nature nature = expect_nature();
            const Token& name = expect_string(keyword + " name");
            if (keyword == "layer")
                declare(model.layers, layer_names_, "layer", name, nature);
            else if (keyword == "user")
                declare(model.users, user_names_, "user", name, nature);
            else
                declare(model.storages, storage_names_, "storage", name, nature);
        } else if (t.text == "datagroup") {
            parse_data_group(model);
        } else if (t.text == "process") {
            parse_process(model);
        } else {
            error(t, "expected a declaration, found " + describe(t));
        }
    }

    void parse_data_group(Model& model)
    {
        next();
        const Token& name = expect_string("data group name");
        DataGroup group{name.text, {}, name.span};
        expect_punct("{");
        std::set<std::string> attr_names;
        while (!at_end() && !at_punct("}")) {
            if (at_declaration_start())
                error(peek(), "expected '}' to close data group " + quote(group.name));
            try {
                expect_keyword("attr");
                const Token& attr = peek();
                if (attr.kind != TokenKind::identifier && attr.kind != TokenKind::keyword)
                    error(attr, "expected attribute name, found " + describe(attr));
                next();
                expect_punct(":");
                Nature nature = expect_nature();
                if (!attr_names.insert(attr.text).second) {
                    diagnostics_.push_back(Diagnostic{Severity::error, "S2",
                                                      "duplicate attribute name '" + attr.text + "' in data group " +
                                                          quote(group.name),
                                                      attr.span, group.name});
                    continue;
                }
                group.attributes.push_back(Attribute{attr.text, nature, attr.span});
            } catch (const SyntaxError&) {
                while (!at_end() && !at_keyword("attr") && !at_punct("}") && !at_declaration_start())
                    next();
            }
        }
        expect_punct("}");
        if (!data_group_names_.insert(group.name).second) {
            duplicate("data group", name);
            return;
        }
        model.data_groups.push_back(std::move(group));
    }

    void parse_process(Model& model)
    {
        next();
        const Token& name = expect_string("process name");
        FunctionalProcess process{name.text, {}, {}, {}, name.span};
        expect_keyword("in");
        expect_keyword("layer");
        process.layer = expect_string("layer name").text;
        if (at_keyword("uses")) {
            next();
            process.uses.push_back(expect_string("process name").text);
            while (at_punct(",")) {
                next();
                process.uses.push_back(expect_string("process name").text);
            }
        }
        expect_punct("{");
        while (!at_end() && !at_punct("}")) {
            if (at_declaration_start())
                error(peek(), "expected '}' to close process " + quote(process.name));
            try {
                process.movements.push_back(parse_movement());
            } catch (const SyntaxError&) {
                while (!at_end() && !is_movement_keyword(peek()) && !at_punct("}") &&
                       !at_declaration_start())
                    next();
            }
        }
        expect_punct("}");
        if (!process_names_.insert(process.name).second) {
            duplicate("process", name);
            return;
        }
        model.processes.push_back(std::move(process));
    }

    DataMovement parse_movement()
    {
        const Token& keyword = peek();
        std::optional<MovementKind> kind =
            keyword.kind == TokenKind::keyword ? kind_from_keyword(keyword.text) : std::nullopt;
        if (!kind)
            error(keyword, "expected a data movement (entry, exit, read, write, qentry, qexit, qread, qwrite), found " +
                               describe(keyword));
        next();

        DataMovement m;
        m.kind = *kind;
        m.span = keyword.span;
        m.data_group = expect_string("data group name").text;

        if (at_keyword("from"))
            m.counterpart.direction = Direction::from;
        else if (at_keyword("to"))
            m.counterpart.direction = Direction::to;
        else
            error(peek(), "expected 'from' or 'to', found " + describe(peek()));
        next();

        const Token& category = peek();
        if (category.kind != TokenKind::keyword)
            error(category, "expected 'user', 'storage', 'process' or 'layer', found " + describe(category));
        if (category.text == "user")
            m.counterpart.kind = EndpointKind::user;
        else if (category.text == "storage")
            m.counterpart.kind = EndpointKind::storage;
        else if (category.text == "process")
            m.counterpart.kind = EndpointKind::process;
        else if (category.text == "layer")
            m.counterpart.kind = EndpointKind::layer;
        else
            error(category, "expected 'user', 'storage', 'process' or 'layer', found " + describe(category));
        next();
        m.counterpart.name = expect_string(std::string(to_string(m.counterpart.kind)) + " name").text;

        if (at_keyword("via")) {
            next();
            if (at_keyword("prepare"))
                m.conversion = Conversion::state_preparation;
            else if (at_keyword("measure"))
                m.conversion = Conversion::measurement;
            else
                error(peek(), "expected 'prepare' or 'measure', found " + describe(peek()));
            next();
        }
        return m;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::vector<Diagnostic> diagnostics_;
    std::size_t syntax_errors_ = 0;
    bool seen_purpose_ = false;
    bool seen_scope_ = false;
    std::set<std::string> layer_names_;
    std::set<std::string> user_names_;
    std::set<std::string> storage_names_;
    std::set<std::string> data_group_names_;
    std::set<std::string> process_names_;
};

void resolve(const Model& model, std::vector<Diagnostic>& out)
{
    auto unresolved = [&](std::string_view category, const std::string& name, const Span& span,
                          const std::string& subject) {
        out.push_back(Diagnostic{Severity::error, "S3",
                                 "unresolved " + std::string(category) + " reference " + quote(name), span, subject});
    };

    for (const FunctionalProcess& p : model.processes) {
        if (model.find_layer(p.layer) == nullptr)
            unresolved("layer", p.layer, p.span, p.name);
        for (const std::string& used : p.uses)
            if (model.find_process(used) == nullptr)
                unresolved("process", used, p.span, p.name);
        for (const DataMovement& m : p.movements) {
            if (model.find_data_group(m.data_group) == nullptr)
                unresolved("data group", m.data_group, m.span, p.name);
            bool found = false;
            switch (m.counterpart.kind) {
            case EndpointKind::user:
                found = model.find_user(m.counterpart.name) != nullptr;
                break;
            case EndpointKind::storage:
                found = model.find_storage(m.counterpart.name) != nullptr;
                break;
            case EndpointKind::process:
                found = model.find_process(m.counterpart.name) != nullptr;
                break;
            case EndpointKind::layer:
                found = model.find_layer(m.counterpart.name) != nullptr;
                break;
            }
            if (!found)
                unresolved(to_string(m.counterpart.kind), m.counterpart.name, m.span, p.name);
        }
    }
}

} // namespace

ParseResult parse_model(std::string_view text, std::string_view file)
{
    ParseResult result;
    LexResult lexed = tokenize(text, file);
    if (!lexed.ok()) {
        result.diagnostics = std::move(lexed.diagnostics);
        sort_diagnostics(result.diagnostics);
        return result;
    }

    Parser parser(std::move(lexed.tokens));
    Model model = parser.parse();
    result.diagnostics = parser.take_diagnostics();
    if (!parser.had_syntax_error())
        resolve(model, result.diagnostics);

    sort_diagnostics(result.diagnostics);
    if (!has_errors(result.diagnostics))
        result.model = std::move(model);
    return result;
}

std::string quote(std::string_view text)
{
    std::string out;
    out.reserve(text.size() + 2);
    out += '"';
    for (char c : text) {
        switch (c) {
        case '"':
            out += "\\\"";
            break;
        case '\\':
            out += "\\\\";
            break;
        case '\n':
            out += "\\n";
            break;
        case '\t':
            out += "\\t";
            break;
        case '\r':
            out += "\\r";
            break;
        default:
            out += c;
        }
    }
    out += '"';
    return out;
}

std::string format_model(const Model& model)
{
    std::string out = "system " + quote(model.name) + " {\n";
    if (!model.purpose.empty())
        out += "  purpose " + quote(model.purpose) + "\n";
    if (!model.scope.empty())
        out += "  scope " + quote(model.scope) + "\n";

    bool section_open = !model.purpose.empty() || !model.scope.empty();
    auto section = [&](bool non_empty) {
        if (non_empty && section_open)
            out += '\n';
        section_open = section_open || non_empty;
    };

    auto declared = [&](std::string_view keyword, const auto& list) {
        section(!list.empty());
        for (const auto& e : list)
            out += "  " + std::string(keyword) + " " + std::string(to_string(e.nature)) + " " + quote(e.name) + "\n";
    };
    declared("layer", model.layers);
    declared("user", model.users);
    declared("storage", model.storages);

    section(!model.data_groups.empty());
    for (const DataGroup& g : model.data_groups) {
        if (g.attributes.empty()) {
            out += "  datagroup " + quote(g.name) + " { }\n";
            continue;
        }
        out += "  datagroup " + quote(g.name) + " {\n";
        for (const Attribute& a : g.attributes)
            out += "    attr " + a.name + ": " + std::string(to_string(a.nature)) + "\n";
        out += "  }\n";
    }

    for (const FunctionalProcess& p : model.processes) {
        section(true);
        out += "  process " + quote(p.name) + " in layer " + quote(p.layer);
        for (std::size_t i = 0; i < p.uses.size(); ++i)
            out += (i == 0 ? " uses " : ", ") + quote(p.uses[i]);
        if (p.movements.empty()) {
            out += " { }\n";
            continue;
        }
        out += " {\n";
        for (const DataMovement& m : p.movements) {
            out += "    ";
            out += kind_keyword(m.kind);
            out += ' ' + quote(m.data_group);
            out += m.counterpart.direction == Direction::from ? " from " : " to ";
            out += to_string(m.counterpart.kind);
            out += ' ' + quote(m.counterpart.name);
            if (m.conversion == Conversion::state_preparation)
                out += " via prepare";
            else if (m.conversion == Conversion::measurement)
                out += " via measure";
            out += '\n';
        }
        out += "  }\n";
    }
    out += "}\n";
    return out;
}

} // namespace qcosmic
