use super::{FieldError, Rational};

/// Largest `n` for which `F(n)` fits in a `u128`.
pub const MAX_FIB_INDEX: u32 = 186;

/// `F(n)` with `F(0) = 0`, `F(1) = 1`. Errors past [`MAX_FIB_INDEX`].
pub fn fibonacci(n: u32) -> Result<u128, FieldError> {
    let (mut prev, mut cur): (u128, u128) = (0, 1);
    if n == 0 {
        return Ok(0);
    }
    for _ in 1..n {
        let next = prev
            .checked_add(cur)
            .ok_or(FieldError::FibonacciOverflow { index: n })?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `F(n+1)/F(n)` in lowest terms.
pub fn fib_ratio(n: u32) -> Result<Rational, FieldError> {
    if n == 0 {
        return Err(FieldError::RatioIndexZero);
    }
    let next = n
        .checked_add(1)
        .ok_or(FieldError::FibonacciOverflow { index: n })?;
    let num = fibonacci(next)?;
    let den = fibonacci(n)?;
    Rational::new(num, den)
}

/// `1 + 1/(1 + 1/(…))` truncated after `depth` nested fractions.
pub fn cf_convergent(depth: u32) -> Rational {
    let one = Rational::one();
    (0..depth).fold(Rational::one(), |tail, _| {
        &one + &tail.recip().expect("convergents are positive")
    })
}
