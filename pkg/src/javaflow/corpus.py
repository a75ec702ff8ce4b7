"""Bundled example programs exercising every control-flow rule.

Each program stays inside the supported subset and keeps all item txts
unique, so the whole corpus works with txt-addressed validation specs.
"""

STRAIGHT_LINE = """\
class Foo {
    int testMethod() {
        int a = 1;
        int b = 2;
        int c = a + b;
        return c;
    }
}
"""

WHILE_SUM = """\
class Calc {
    int sum(int n) {
        int s = 0;
        int i = 0;
        while (i < n) {
            s = s + i;
            i++;
        }
        return s;
    }
}
"""

LABELED_JUMPS = """\
class Jump {
    void run() {
        a: while (true) {
            int x = 1;
            if (x > 0) {
                break a;
            }
            continue;
        }
    }
}
"""

NESTED_BLOCKS = """\
class Nest {
    void m() {
        { }
        { { int a = 1; } }
        int b = 2;
    }
}
"""

LABELED_BLOCK = """\
class Lab {
    void m() {
        int a = 1;
        b: { int c = 2; }
        int d = 3;
    }
}
"""

IF_ELSE = """\
class Cond {
    int m(int x) {
        int r = 0;
        if (x > 0) {
            r = 1;
        } else {
            r = 2;
        }
        return r;
    }
}
"""

IF_NO_ELSE = """\
class Cond2 {
    int m(int x) {
        if (x > 0) {
            x = x - 1;
        }
        return x;
    }
}
"""

EARLY_RETURN = """\
class Ret {
    int m(int x) {
        if (x < 0) {
            return 0;
        }
        return x;
    }
}
"""

BREAK_PLAIN = """\
class Brk {
    void m() {
        while (true) {
            break;
        }
        int a = 1;
    }
}
"""

CONTINUE_PLAIN = """\
class Cont {
    void m(int n) {
        while (n > 0) {
            continue;
        }
    }
}
"""

CONTINUE_LABELED = """\
class ContL {
    void m(int n) {
        a: while (n > 0) {
            while (true) {
                continue a;
            }
        }
    }
}
"""

EMPTY_LOOP = """\
class Spin {
    void m(int n) {
        while (n > 0) {
        }
    }
}
"""

DEAD_TAIL = """\
class Dead {
    void m() {
        while (true) {
            break;
            int a = 1;
        }
        int b = 2;
    }
}
"""

TWO_PARAMS = """\
class Two {
    int max(int a, int b) {
        if (a > b) {
            return a;
        }
        return b;
    }
}
"""

KILL_CHAIN = """\
class Kill {
    int m() {
        int a = 1;
        a = 2;
        int c = a + 0;
        return c;
    }
}
"""

NO_CYCLE = """\
class Line {
    int m(int x) {
        x = x + 1;
        return x;
    }
}
"""

EXPR_MIX = """\
class Expr1 {
    boolean m(boolean p, int k) {
        boolean q = !p;
        int t = -k + 2 * (k - 1);
        if (q && k <= 10 || false) {
            q = true;
        }
        return q;
    }
}
"""

EMPTY_METHOD = """\
class Empty {
    void m() {
    }
}
"""

PROGRAMS: dict[str, str] = {
    "straight_line": STRAIGHT_LINE,
    "while_sum": WHILE_SUM,
    "labeled_jumps": LABELED_JUMPS,
    "nested_blocks": NESTED_BLOCKS,
    "labeled_block": LABELED_BLOCK,
    "if_else": IF_ELSE,
    "if_no_else": IF_NO_ELSE,
    "early_return": EARLY_RETURN,
    "break_plain": BREAK_PLAIN,
    "continue_plain": CONTINUE_PLAIN,
    "continue_labeled": CONTINUE_LABELED,
    "empty_loop": EMPTY_LOOP,
    "dead_tail": DEAD_TAIL,
    "two_params": TWO_PARAMS,
    "kill_chain": KILL_CHAIN,
    "no_cycle": NO_CYCLE,
    "expr_mix": EXPR_MIX,
    "empty_method": EMPTY_METHOD,
}
