// stream.hpp -- pull-style enumeration streams usable in range-for loops

#pragma once

#include <iterator>
#include <optional>
#include <utility>
#include <vector>

namespace ncolor {

/// Mixin giving a class with `std::optional<T> next()` an input-range
/// interface. Iterating consumes the stream.
template <class Derived, class T>
class StreamBase
{
public:
    using value_type = T;

    class iterator
    {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = T;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(Derived* s) : _stream(s), _current(s->next()) {}

        const T& operator*() const { return *_current; }
        const T* operator->() const { return &*_current; }
        iterator& operator++()
        {
            _current = _stream->next();
            return *this;
        }
        void operator++(int) { ++*this; }
        bool operator==(std::default_sentinel_t) const { return !_current.has_value(); }

    private:
        Derived* _stream = nullptr;
        std::optional<T> _current;
    };

    iterator begin() { return iterator(static_cast<Derived*>(this)); }
    std::default_sentinel_t end() { return {}; }
};

/// Drains a stream into a vector.
template <class Stream>
auto collect(Stream&& s)
{
    std::vector<typename std::decay_t<Stream>::value_type> out;
    while (auto v = s.next())
        out.push_back(std::move(*v));
    return out;
}

/// Counts the remaining items of a stream.
template <class Stream>
std::size_t drainCount(Stream&& s)
{
    std::size_t n = 0;
    while (s.next())
        ++n;
    return n;
}

} // namespace ncolor
