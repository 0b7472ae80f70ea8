//! Depth-first walks over the two witness sets, threading an arbitrary state
//! (the partial vector, or the partial product) down each branch.

use crate::{Error, Result};

/// Walks every length-`k` integer vector with exactly `d_minus` negative
/// entries, negative magnitudes summing to at most `d` and nonnegative entries
/// summing to at most `k - 1 - d`.
pub(super) fn walk_s<S>(
    k: usize,
    d_minus: usize,
    d: usize,
    cap: usize,
    root: S,
    step: &mut dyn FnMut(&S, usize, i32) -> Result<S>,
    leaf: &mut dyn FnMut(S),
) -> Result<usize> {
    struct Ctx<'a, S> {
        k: usize,
        d_minus: usize,
        neg_budget: usize,
        pos_budget: usize,
        cap: usize,
        count: usize,
        step: &'a mut dyn FnMut(&S, usize, i32) -> Result<S>,
        leaf: &'a mut dyn FnMut(S),
    }

    fn go<S>(ctx: &mut Ctx<'_, S>, pos: usize, negs: usize, neg_sum: usize, pos_sum: usize, state: S) -> Result<()> {
        if pos == ctx.k {
            ctx.count += 1;
            if ctx.count > ctx.cap {
                return Err(Error::EnumerationTooLarge { cap: ctx.cap });
            }
            (ctx.leaf)(state);
            return Ok(());
        }
        let slots_left = ctx.k - pos - 1;
        if negs < ctx.d_minus {
            // every later negative needs magnitude >= 1
            let reserve = ctx.d_minus - negs - 1;
            for v in 1..=(ctx.neg_budget - neg_sum).saturating_sub(reserve) {
                let next = (ctx.step)(&state, pos, -(v as i32))?;
                go(ctx, pos + 1, negs + 1, neg_sum + v, pos_sum, next)?;
            }
        }
        if slots_left >= ctx.d_minus - negs {
            for v in 0..=(ctx.pos_budget - pos_sum) {
                let next = (ctx.step)(&state, pos, v as i32)?;
                go(ctx, pos + 1, negs, neg_sum, pos_sum + v, next)?;
            }
        }
        Ok(())
    }

    let mut ctx = Ctx { k, d_minus, neg_budget: d, pos_budget: k - 1 - d, cap, count: 0, step, leaf };
    go(&mut ctx, 0, 0, 0, 0, root)?;
    Ok(ctx.count)
}

/// Walks every `(u_0, .., u_{l-1})` with `0 <= u_i <= p - 1` and
/// `sum (i*k + 1) u_i < k*l`.
pub(super) fn walk_t<S>(
    p: u64,
    k: usize,
    l: usize,
    cap: usize,
    root: S,
    step: &mut dyn FnMut(&S, usize, i32) -> Result<S>,
    leaf: &mut dyn FnMut(S),
) -> Result<usize> {
    struct Ctx<'a, S> {
        max_digit: usize,
        k: usize,
        l: usize,
        cap: usize,
        count: usize,
        step: &'a mut dyn FnMut(&S, usize, i32) -> Result<S>,
        leaf: &'a mut dyn FnMut(S),
    }

    fn go<S>(ctx: &mut Ctx<'_, S>, pos: usize, room: usize, state: S) -> Result<()> {
        if pos == ctx.l {
            ctx.count += 1;
            if ctx.count > ctx.cap {
                return Err(Error::EnumerationTooLarge { cap: ctx.cap });
            }
            (ctx.leaf)(state);
            return Ok(());
        }
        let weight = pos * ctx.k + 1;
        for v in 0..=ctx.max_digit.min(room / weight) {
            let next = (ctx.step)(&state, pos, v as i32)?;
            go(ctx, pos + 1, room - v * weight, next)?;
        }
        Ok(())
    }

    let max_digit = usize::try_from(p - 1).unwrap_or(usize::MAX);
    let mut ctx = Ctx { max_digit, k, l, cap, count: 0, step, leaf };
    go(&mut ctx, 0, k * l - 1, root)?;
    Ok(ctx.count)
}
