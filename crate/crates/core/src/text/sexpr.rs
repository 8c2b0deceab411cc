use super::TextError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum SExpr {
    Atom(String, Pos),
    List(Vec<SExpr>, Pos),
}

impl SExpr {
    pub fn pos(&self) -> Pos {
        match self {
            SExpr::Atom(_, p) | SExpr::List(_, p) => *p,
        }
    }

    pub fn error(&self, message: impl Into<String>) -> TextError {
        let p = self.pos();
        TextError::syntax(p.line, p.col, message)
    }

    pub fn atom(&self) -> Option<&str> {
        match self {
            SExpr::Atom(a, _) => Some(a),
            SExpr::List(..) => None,
        }
    }

    pub fn list(&self) -> Option<&[SExpr]> {
        match self {
            SExpr::List(items, _) => Some(items),
            SExpr::Atom(..) => None,
        }
    }

    /// The items of a list whose head is the atom `head`.
    pub fn tagged(&self, head: &str) -> Option<&[SExpr]> {
        let items = self.list()?;
        (items.first()?.atom()? == head).then(|| &items[1..])
    }
}

/// Reads every top-level s-expression in `text`. `;` starts a comment.
pub(crate) fn read_all(text: &str) -> Result<Vec<SExpr>, TextError> {
    let mut stack: Vec<(Vec<SExpr>, Pos)> = Vec::new();
    let mut top = Vec::new();
    let mut atom: Option<(String, Pos)> = None;

    let flush = |atom: &mut Option<(String, Pos)>, stack: &mut Vec<(Vec<SExpr>, Pos)>, top: &mut Vec<SExpr>| {
        if let Some((a, p)) = atom.take() {
            let e = SExpr::Atom(a, p);
            match stack.last_mut() {
                Some((items, _)) => items.push(e),
                None => top.push(e),
            }
        }
    };

    for (li, line) in text.lines().enumerate() {
        for (ci, ch) in line.chars().enumerate() {
            let pos = Pos {
                line: li + 1,
                col: ci + 1,
            };
            match ch {
                ';' => break,
                '(' => {
                    flush(&mut atom, &mut stack, &mut top);
                    stack.push((Vec::new(), pos));
                }
                ')' => {
                    flush(&mut atom, &mut stack, &mut top);
                    let (items, start) = stack
                        .pop()
                        .ok_or_else(|| TextError::syntax(pos.line, pos.col, "unbalanced `)`"))?;
                    let e = SExpr::List(items, start);
                    match stack.last_mut() {
                        Some((items, _)) => items.push(e),
                        None => top.push(e),
                    }
                }
                c if c.is_whitespace() => flush(&mut atom, &mut stack, &mut top),
                c => match &mut atom {
                    Some((a, _)) => a.push(c),
                    None => atom = Some((c.to_string(), pos)),
                },
            }
        }
        flush(&mut atom, &mut stack, &mut top);
    }
    if let Some((_, p)) = stack.last() {
        return Err(TextError::syntax(p.line, p.col, "unclosed `(`"));
    }
    Ok(top)
}
