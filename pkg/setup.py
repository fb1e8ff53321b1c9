import re
from os.path import exists
from setuptools import find_packages, setup


def parse_requirements(fname='requirements.txt', with_version=True):
    """List the requirements of `fname`, following `-r other.txt` includes.

    refering to mmdetection; with_version=False strips the version specs
    """
    if not exists(fname):
        return []
    packages = []
    with open(fname, 'r') as f:
        for line in f:
            line = line.split('#', 1)[0].strip()
            if not line:
                continue
            if line.startswith('-r '):
                packages.extend(parse_requirements(line.split(' ', 1)[1], with_version))
            elif with_version:
                packages.append(line)
            else:
                packages.append(re.split('[<>=;]', line, maxsplit=1)[0].strip())
    return packages


def readme():
    with open('README.md', encoding='utf-8') as f:
        content = f.read()
    return content


def get_version():
    version_file = 'libdform/version.py'
    namespace = dict()
    with open(version_file, 'r', encoding='utf-8') as f:
        exec(compile(f.read(), version_file, 'exec'), namespace)
    return namespace['__version__']


if __name__ == '__main__':
    setup(
        name='libdform',
        version=get_version(),
        description='Differential forms, Dirichlet forms and line integrals on the Sierpinski gasket',
        long_description=readme(),
        long_description_content_type='text/markdown',
        keywords='fractal, Sierpinski gasket, Dirichlet form, differential forms',
        packages=find_packages(exclude=('scripts',)),
        license='GPL 3.0',
        install_requires=parse_requirements('requirements.txt'),
        extras_require={'tests': ['pytest']},
        entry_points={'console_scripts': ['libdform=libdform.tools.cli:main']},
        zip_safe=False)
