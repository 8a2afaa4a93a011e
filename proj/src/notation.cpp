// notation.cpp

#include "ncolor/notation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "ncolor/errors.hpp"

namespace ncolor {

namespace {

struct RawPart
{
    int size = 0;
    std::optional<int> color;
    std::optional<std::pair<int, int>> spots;
    std::size_t at = 0;
};

class Lexer
{
public:
    explicit Lexer(std::string_view s) : _s(s) {}

    bool done() const { return _i >= _s.size(); }
    std::size_t pos() const { return _i; }
    char peek() const { return done() ? '\0' : _s[_i]; }

    void expect(char c)
    {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", _i);
        ++_i;
    }

    bool accept(char c)
    {
        if (peek() != c)
            return false;
        ++_i;
        return true;
    }

    int integer()
    {
        std::size_t start = _i;
        long long v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(_s[_i]))) {
            v = v * 10 + (_s[_i] - '0');
            if (v > std::numeric_limits<int>::max())
                throw ParseError("integer too large", start);
            ++_i;
        }
        if (_i == start)
            throw ParseError("expected an integer", start);
        return static_cast<int>(v);
    }

private:
    std::string_view _s;
    std::size_t _i = 0;
};

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<RawPart> parseRaw(std::string_view text)
{
    text = trim(text);
    if (text.empty())
        throw ParseError("empty composition", 0);
    Lexer lx(text);
    std::vector<RawPart> parts;
    do {
        RawPart p;
        p.at = lx.pos();
        p.size = lx.integer();
        if (lx.accept('_')) {
            if (lx.accept('{')) {
                int i = lx.integer();
                lx.expect(',');
                int j = lx.integer();
                lx.expect('}');
                p.spots = std::pair{i, j};
            } else {
                p.color = lx.integer();
            }
        }
        parts.push_back(p);
    } while (lx.accept('+'));
    if (!lx.done())
        throw ParseError(std::string("unexpected character '") + lx.peek() + "'", lx.pos());
    return parts;
}

template <class F>
auto located(const RawPart& p, F&& make)
{
    try {
        return make();
    } catch (const ParseError&) {
        throw;
    } catch (const DomainError& e) {
        throw ParseError(e.what(), p.at);
    }
}

ColoredComposition buildColored(const std::vector<RawPart>& raw)
{
    std::vector<Part> parts;
    for (const auto& p : raw) {
        if (p.spots)
            throw ParseError("spot pair not allowed in a colored composition", p.at);
        parts.push_back(located(p, [&] { return Part(p.size, p.color); }));
    }
    return ColoredComposition(std::move(parts));
}

ChooseTwoComposition buildChooseTwo(const std::vector<RawPart>& raw)
{
    std::vector<SpotPairPart> parts;
    for (const auto& p : raw) {
        if (!p.spots)
            throw ParseError("every part needs a spot pair _{i,j}", p.at);
        parts.push_back(
            located(p, [&] { return SpotPairPart(p.size, p.spots->first, p.spots->second); }));
    }
    return ChooseTwoComposition(std::move(parts));
}

} // namespace

ColoredComposition parseComposition(std::string_view text)
{
    return buildColored(parseRaw(text));
}

ChooseTwoComposition parseChooseTwo(std::string_view text)
{
    return buildChooseTwo(parseRaw(text));
}

std::variant<ColoredComposition, ChooseTwoComposition> parseAnyComposition(std::string_view text)
{
    auto raw = parseRaw(text);
    bool anySpots = std::any_of(raw.begin(), raw.end(), [](const RawPart& p) { return p.spots.has_value(); });
    if (anySpots)
        return buildChooseTwo(raw);
    return buildColored(raw);
}

std::string format(const ColoredComposition& comp, bool spotConvention)
{
    std::string out;
    for (const auto& p : comp.parts()) {
        if (!out.empty())
            out += '+';
        out += std::to_string(p.size);
        if (p.color)
            out += '_' + std::to_string(*p.color);
        else if (spotConvention)
            out += "_1";
    }
    return out;
}

std::string format(const ChooseTwoComposition& comp)
{
    std::string out;
    for (const auto& p : comp.parts()) {
        if (!out.empty())
            out += '+';
        out += std::to_string(p.size) + "_{" + std::to_string(p.first) + "," +
               std::to_string(p.second) + "}";
    }
    return out;
}

nlohmann::json toJson(const ColoredComposition& comp)
{
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& p : comp.parts()) {
        nlohmann::json color = nullptr;
        if (p.color)
            color = *p.color;
        parts.push_back({{"size", p.size}, {"color", color}});
    }
    return {{"total", comp.total()}, {"parts", parts}};
}

nlohmann::json toJson(const ChooseTwoComposition& comp)
{
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& p : comp.parts())
        parts.push_back({{"size", p.size}, {"spots", {p.first, p.second}}});
    return {{"total", comp.total()}, {"parts", parts}};
}

std::variant<ColoredComposition, ChooseTwoComposition> compositionFromJson(const nlohmann::json& j)
{
    try {
        const auto& jp = j.at("parts");
        if (!jp.is_array() || jp.empty())
            throw DomainError("\"parts\" must be a non-empty array");
        bool spots = jp.front().contains("spots");
        std::variant<ColoredComposition, ChooseTwoComposition> out = [&]()
            -> std::variant<ColoredComposition, ChooseTwoComposition> {
            if (spots) {
                std::vector<SpotPairPart> parts;
                for (const auto& e : jp) {
                    const auto& s = e.at("spots");
                    if (!s.is_array() || s.size() != 2)
                        throw DomainError("\"spots\" must hold exactly two integers");
                    parts.emplace_back(e.at("size").get<int>(), s[0].get<int>(), s[1].get<int>());
                }
                return ChooseTwoComposition(std::move(parts));
            }
            std::vector<Part> parts;
            for (const auto& e : jp) {
                if (e.contains("spots"))
                    throw DomainError("cannot mix colored and spot-pair parts");
                std::optional<int> color;
                if (e.contains("color") && !e.at("color").is_null())
                    color = e.at("color").get<int>();
                parts.emplace_back(e.at("size").get<int>(), color);
            }
            return ColoredComposition(std::move(parts));
        }();
        int total = std::visit([](const auto& c) { return c.total(); }, out);
        if (j.contains("total") && j.at("total").get<int>() != total)
            throw DomainError("\"total\" does not match the sum of part sizes");
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed composition JSON: ") + e.what());
    }
}

} // namespace ncolor
