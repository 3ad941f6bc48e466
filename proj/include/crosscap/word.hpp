#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace crosscap {

// A letter is a nonzero signed generator id: +i stands for the i-th generator,
// -i for its inverse.
using Letter = int;

inline int letter_index(Letter l) { return l < 0 ? -l : l; }
inline Letter letter_inverse(Letter l) { return -l; }

// Total letter order: by generator index, positive before negative.
inline int letter_rank(Letter l) {
	return 2 * letter_index(l) + (l < 0 ? 1 : 0);
}

namespace detail {

inline void append_reduced(std::vector<Letter>& out, Letter l) {
	if (l == 0)
		throw std::invalid_argument("zero letter");
	if (!out.empty() && out.back() == letter_inverse(l))
		out.pop_back();
	else
		out.push_back(l);
}

// Lexicographic comparison under letter_rank; shorter sequences first.
inline bool letters_less(const std::vector<Letter>& a, const std::vector<Letter>& b) {
	if (a.size() != b.size())
		return a.size() < b.size();
	for (std::size_t i = 0; i < a.size(); ++i)
		if (a[i] != b[i])
			return letter_rank(a[i]) < letter_rank(b[i]);
	return false;
}

}  // namespace detail

// Freely reduced word in a free group.
class Word {
public:
	Word() = default;

	explicit Word(const std::vector<Letter>& raw) {
		letters_.reserve(raw.size());
		for (Letter l : raw)
			detail::append_reduced(letters_, l);
	}

	static Word generator(int index, int sign = +1) {
		if (index <= 0 || (sign != +1 && sign != -1))
			throw std::invalid_argument("bad generator");
		Word w;
		w.letters_.push_back(sign * index);
		return w;
	}

	const std::vector<Letter>& letters() const { return letters_; }
	std::size_t size() const { return letters_.size(); }
	bool empty() const { return letters_.empty(); }

	int max_index() const {
		int m = 0;
		for (Letter l : letters_)
			if (letter_index(l) > m)
				m = letter_index(l);
		return m;
	}

	Word operator*(const Word& rhs) const {
		Word out;
		out.letters_ = letters_;
		for (Letter l : rhs.letters_)
			detail::append_reduced(out.letters_, l);
		return out;
	}

	Word inverse() const {
		Word out;
		out.letters_.reserve(letters_.size());
		for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
			out.letters_.push_back(letter_inverse(*it));
		return out;
	}

	Word pow(int k) const {
		Word base = k < 0 ? inverse() : *this;
		int n = k < 0 ? -k : k;
		Word out;
		for (int i = 0; i < n; ++i)
			out = out * base;
		return out;
	}

	bool operator==(const Word& rhs) const { return letters_ == rhs.letters_; }
	bool operator!=(const Word& rhs) const { return !(*this == rhs); }
	bool operator<(const Word& rhs) const {
		return detail::letters_less(letters_, rhs.letters_);
	}

private:
	std::vector<Letter> letters_;
};

// Cyclically reduced word in canonical (lexicographically minimal) rotation;
// represents a conjugacy class.
class CyclicWord {
public:
	CyclicWord() = default;

	explicit CyclicWord(const Word& w) : letters_(w.letters()) { canonicalize(); }
	explicit CyclicWord(const std::vector<Letter>& raw) : letters_(Word(raw).letters()) {
		canonicalize();
	}

	const std::vector<Letter>& letters() const { return letters_; }
	std::size_t size() const { return letters_.size(); }
	bool empty() const { return letters_.empty(); }

	int max_index() const {
		int m = 0;
		for (Letter l : letters_)
			if (letter_index(l) > m)
				m = letter_index(l);
		return m;
	}

	// The based word reading the class from position `start`.
	Word rotated(std::size_t start) const {
		if (letters_.empty())
			return Word();
		std::vector<Letter> out;
		out.reserve(letters_.size());
		for (std::size_t i = 0; i < letters_.size(); ++i)
			out.push_back(letters_[(start + i) % letters_.size()]);
		return Word(out);
	}

	CyclicWord inverted() const { return CyclicWord(rotated(0).inverse()); }

	// True when the letter sequence is a proper power u^k, k >= 2.
	bool is_proper_power() const {
		std::size_t n = letters_.size();
		for (std::size_t p = 1; p <= n / 2; ++p) {
			if (n % p != 0)
				continue;
			bool periodic = true;
			for (std::size_t i = p; i < n && periodic; ++i)
				periodic = letters_[i] == letters_[i - p];
			if (periodic)
				return true;
		}
		return false;
	}

	bool operator==(const CyclicWord& rhs) const { return letters_ == rhs.letters_; }
	bool operator!=(const CyclicWord& rhs) const { return !(*this == rhs); }
	bool operator<(const CyclicWord& rhs) const {
		return detail::letters_less(letters_, rhs.letters_);
	}

private:
	void canonicalize() {
		// Cyclic reduction: strip cancelling first/last pairs.
		std::size_t lo = 0, hi = letters_.size();
		while (hi - lo >= 2 && letters_[lo] == letter_inverse(letters_[hi - 1])) {
			++lo;
			--hi;
		}
		letters_.assign(letters_.begin() + lo, letters_.begin() + hi);
		if (letters_.size() < 2)
			return;
		// Minimal rotation under letter_rank order.
		std::size_t n = letters_.size();
		std::size_t best = 0;
		for (std::size_t cand = 1; cand < n; ++cand) {
			for (std::size_t i = 0; i < n; ++i) {
				int a = letter_rank(letters_[(best + i) % n]);
				int b = letter_rank(letters_[(cand + i) % n]);
				if (b < a) {
					best = cand;
					break;
				}
				if (b > a)
					break;
			}
		}
		if (best != 0) {
			std::vector<Letter> rot;
			rot.reserve(n);
			for (std::size_t i = 0; i < n; ++i)
				rot.push_back(letters_[(best + i) % n]);
			letters_ = rot;
		}
	}

	std::vector<Letter> letters_;
};

inline CyclicWord cyclic_canonical(const Word& w) { return CyclicWord(w); }

// Text grammar: whitespace-separated tokens `<prefix><i>` and `<prefix><i>^-1`;
// the empty word is spelled `e`.
inline std::string word_to_text(const std::vector<Letter>& letters, char prefix) {
	if (letters.empty())
		return "e";
	std::string out;
	for (Letter l : letters) {
		if (!out.empty())
			out += ' ';
		out += prefix;
		out += std::to_string(letter_index(l));
		if (l < 0)
			out += "^-1";
	}
	return out;
}

inline std::string word_to_text(const Word& w, char prefix = 'x') {
	return word_to_text(w.letters(), prefix);
}

inline std::string word_to_text(const CyclicWord& w, char prefix = 'x') {
	return word_to_text(w.letters(), prefix);
}

inline Word word_from_text(const std::string& text, char prefix = 'x') {
	std::vector<Letter> letters;
	std::size_t i = 0;
	while (i < text.size()) {
		if (text[i] == ' ' || text[i] == '\t' || text[i] == '\n') {
			++i;
			continue;
		}
		std::size_t j = i;
		while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\n')
			++j;
		std::string token = text.substr(i, j - i);
		i = j;
		if (token == "e")
			continue;
		if (token.size() < 2 || token[0] != prefix)
			throw std::invalid_argument("bad token '" + token + "' (expected " +
			                            std::string(1, prefix) + "<i>, " +
			                            std::string(1, prefix) + "<i>^-1 or e)");
		std::size_t k = 1;
		while (k < token.size() && token[k] >= '0' && token[k] <= '9')
			++k;
		if (k == 1)
			throw std::invalid_argument("bad token '" + token + "': missing index");
		int index = 0;
		for (std::size_t p = 1; p < k; ++p) {
			index = index * 10 + (token[p] - '0');
			if (index > 1000000)
				throw std::invalid_argument("bad token '" + token + "': index too large");
		}
		if (index == 0)
			throw std::invalid_argument("bad token '" + token + "': index must be positive");
		int sign = +1;
		if (k != token.size()) {
			if (token.substr(k) != "^-1")
				throw std::invalid_argument("bad token '" + token + "': only ^-1 exponents");
			sign = -1;
		}
		letters.push_back(sign * index);
	}
	return Word(letters);
}

inline CyclicWord class_from_text(const std::string& text, char prefix = 'x') {
	return CyclicWord(word_from_text(text, prefix));
}

}  // namespace crosscap
