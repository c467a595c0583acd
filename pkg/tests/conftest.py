# keeps pytest rooted here so `import helpers` resolves inside tests/
