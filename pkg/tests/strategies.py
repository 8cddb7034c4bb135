from hypothesis import strategies as st


def binary(min_size=0, max_size=12):
    return st.text(alphabet="01", min_size=min_size, max_size=max_size)


def ternary(min_size=0, max_size=10):
    return st.text(alphabet="012", min_size=min_size, max_size=max_size)
