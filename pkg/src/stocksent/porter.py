"""Porter suffix-stripping stemmer.

Implements the classic 1980 algorithm with the three departures that the
widely used reference implementation made canonical:

* words of length 1 or 2 are returned unchanged,
* step 2 maps -bli to -ble (the published paper used -abli to -able),
* step 2 also maps -logi to -log.

Measure m counts vowel-consonant sequences in the candidate stem; a
trailing y is a consonant only when it follows a vowel or starts the
word. Non-letters count as consonants, which is harmless here because
the text cleaner only feeds lowercase a-z tokens.
"""


class PorterStemmer:
    """Stateful single-word stemmer. Instances are cheap and reusable."""

    def __init__(self):
        self.b = ""   # working buffer
        self.k = 0    # index of last valid character in b
        self.j = 0    # end of candidate stem during suffix checks

    def _cons(self, i):
        ch = self.b[i]
        if ch in "aeiou":
            return False
        if ch == "y":
            return i == 0 or not self._cons(i - 1)
        return True

    def _m(self):
        # number of vc sequences in b[0..j]
        i = 0
        while True:
            if i > self.j:
                return 0
            if not self._cons(i):
                break
            i += 1
        i += 1
        n = 0
        while True:
            while True:
                if i > self.j:
                    return n
                if self._cons(i):
                    break
                i += 1
            i += 1
            n += 1
            while True:
                if i > self.j:
                    return n
                if not self._cons(i):
                    break
                i += 1
            i += 1

    def _vowel_in_stem(self):
        for i in range(self.j + 1):
            if not self._cons(i):
                return True
        return False

    def _doublec(self, j):
        if j < 1:
            return False
        if self.b[j] != self.b[j - 1]:
            return False
        return self._cons(j)

    def _cvc(self, i):
        # consonant-vowel-consonant ending at i, last consonant not w/x/y;
        # used to decide whether to restore a final e (hop-e, not snow-e)
        if i < 2 or not self._cons(i) or self._cons(i - 1) or not self._cons(i - 2):
            return False
        return self.b[i] not in "wxy"

    def _ends(self, s):
        if s[-1] != self.b[self.k]:
            return False
        length = len(s)
        if length > self.k + 1:
            return False
        if self.b[self.k - length + 1:self.k + 1] != s:
            return False
        self.j = self.k - length
        return True

    def _set_to(self, s):
        self.b = self.b[:self.j + 1] + s
        self.k = len(self.b) - 1

    def _replace_if_stem(self, s):
        if self._m() > 0:
            self._set_to(s)

    def _step1ab(self):
        # plurals and -ed/-ing: caresses -> caress, ponies -> poni,
        # agreed -> agree, matting -> mat, hoping -> hope
        if self.b[self.k] == "s":
            if self._ends("sses"):
                self.k -= 2
            elif self._ends("ies"):
                self._set_to("i")
            elif self.b[self.k - 1] != "s":
                self.k -= 1
        if self._ends("eed"):
            if self._m() > 0:
                self.k -= 1
        elif (self._ends("ed") or self._ends("ing")) and self._vowel_in_stem():
            self.k = self.j
            if self._ends("at"):
                self._set_to("ate")
            elif self._ends("bl"):
                self._set_to("ble")
            elif self._ends("iz"):
                self._set_to("ize")
            elif self._doublec(self.k):
                if self.b[self.k - 1] not in "lsz":
                    self.k -= 1
            elif self._m() == 1 and self._cvc(self.k):
                self._set_to("e")

    def _step1c(self):
        # terminal y -> i when the stem holds another vowel
        if self._ends("y") and self._vowel_in_stem():
            self.b = self.b[:self.k] + "i"

    def _step2(self):
        # double suffixes to single ones, only when m > 0; dispatch on the
        # second-to-last letter so each word tries at most one bucket
        ch = self.b[self.k - 1]
        if ch == "a":
            if self._ends("ational"):
                self._replace_if_stem("ate")
            elif self._ends("tional"):
                self._replace_if_stem("tion")
        elif ch == "c":
            if self._ends("enci"):
                self._replace_if_stem("ence")
            elif self._ends("anci"):
                self._replace_if_stem("ance")
        elif ch == "e":
            if self._ends("izer"):
                self._replace_if_stem("ize")
        elif ch == "l":
            if self._ends("bli"):
                self._replace_if_stem("ble")
            elif self._ends("alli"):
                self._replace_if_stem("al")
            elif self._ends("entli"):
                self._replace_if_stem("ent")
            elif self._ends("eli"):
                self._replace_if_stem("e")
            elif self._ends("ousli"):
                self._replace_if_stem("ous")
        elif ch == "o":
            if self._ends("ization"):
                self._replace_if_stem("ize")
            elif self._ends("ation"):
                self._replace_if_stem("ate")
            elif self._ends("ator"):
                self._replace_if_stem("ate")
        elif ch == "s":
            if self._ends("alism"):
                self._replace_if_stem("al")
            elif self._ends("iveness"):
                self._replace_if_stem("ive")
            elif self._ends("fulness"):
                self._replace_if_stem("ful")
            elif self._ends("ousness"):
                self._replace_if_stem("ous")
        elif ch == "t":
            if self._ends("aliti"):
                self._replace_if_stem("al")
            elif self._ends("iviti"):
                self._replace_if_stem("ive")
            elif self._ends("biliti"):
                self._replace_if_stem("ble")
        elif ch == "g":
            if self._ends("logi"):
                self._replace_if_stem("log")

    def _step3(self):
        # -ic-, -ful, -ness and friends, dispatch on the last letter
        ch = self.b[self.k]
        if ch == "e":
            if self._ends("icate"):
                self._replace_if_stem("ic")
            elif self._ends("ative"):
                self._replace_if_stem("")
            elif self._ends("alize"):
                self._replace_if_stem("al")
        elif ch == "i":
            if self._ends("iciti"):
                self._replace_if_stem("ic")
        elif ch == "l":
            if self._ends("ical"):
                self._replace_if_stem("ic")
            elif self._ends("ful"):
                self._replace_if_stem("")
        elif ch == "s":
            if self._ends("ness"):
                self._replace_if_stem("")

    def _step4(self):
        # strip -ant, -ence etc. when the remaining stem has m > 1
        ch = self.b[self.k - 1]
        if ch == "a":
            if not self._ends("al"):
                return
        elif ch == "c":
            if not self._ends("ance") and not self._ends("ence"):
                return
        elif ch == "e":
            if not self._ends("er"):
                return
        elif ch == "i":
            if not self._ends("ic"):
                return
        elif ch == "l":
            if not self._ends("able") and not self._ends("ible"):
                return
        elif ch == "n":
            if self._ends("ant"):
                pass
            elif self._ends("ement"):
                pass
            elif self._ends("ment"):
                pass
            elif self._ends("ent"):
                pass
            else:
                return
        elif ch == "o":
            # -ion only after s or t, plus the -ou of colour words
            if self._ends("ion") and self.b[self.j] in "st":
                pass
            elif self._ends("ou"):
                pass
            else:
                return
        elif ch == "s":
            if not self._ends("ism"):
                return
        elif ch == "t":
            if not self._ends("ate") and not self._ends("iti"):
                return
        elif ch == "u":
            if not self._ends("ous"):
                return
        elif ch == "v":
            if not self._ends("ive"):
                return
        elif ch == "z":
            if not self._ends("ize"):
                return
        else:
            return
        if self._m() > 1:
            self.k = self.j

    def _step5(self):
        # drop a final e when m > 1, or when m == 1 without a cvc ending;
        # then undouble a final ll when m > 1
        self.j = self.k
        if self.b[self.k] == "e":
            a = self._m()
            if a > 1 or (a == 1 and not self._cvc(self.k - 1)):
                self.k -= 1
        if self.b[self.k] == "l" and self._doublec(self.k) and self._m() > 1:
            self.k -= 1

    def stem(self, word):
        """Return the stem of a single word, lowercased."""
        word = word.lower()
        k = len(word) - 1
        if k <= 1:
            return word
        self.b = word
        self.k = k
        self._step1ab()
        self._step1c()
        self._step2()
        self._step3()
        self._step4()
        self._step5()
        return self.b[:self.k + 1]


_shared = PorterStemmer()


def stem(word: str) -> str:
    """Stem one word with a shared stemmer instance."""
    return _shared.stem(word)
